import os
import re
import shlex
import subprocess

grid = [list(map(int, line.split()))
        for line in open('input.txt').read().splitlines() if line.strip()]
n = len(grid)
half = n // 2

cell = [['b%d_%d' % (r, c) for c in range(n)] for r in range(n)]
lines = []
for r in range(n):
    for c in range(n):
        lines.append('(declare-const %s Int)' % cell[r][c])
        if grid[r][c]:
            lines.append('(assert (= %s %d))' % (cell[r][c], grid[r][c]))
        else:
            lines.append('(assert (or (= %s 1) (= %s 2)))'
                         % (cell[r][c], cell[r][c]))

# Each row and column holds exactly n/2 ones (and therefore n/2 twos)
for r in range(n):
    ones = ' '.join('(ite (= %s 1) 1 0)' % cell[r][c] for c in range(n))
    lines.append('(assert (= (+ %s) %d))' % (ones, half))
for c in range(n):
    ones = ' '.join('(ite (= %s 1) 1 0)' % cell[r][c] for r in range(n))
    lines.append('(assert (= (+ %s) %d))' % (ones, half))

# No three consecutive equal symbols in any row or column
for r in range(n):
    for c in range(n - 2):
        a, b, d = cell[r][c], cell[r][c + 1], cell[r][c + 2]
        lines.append('(assert (not (and (= %s %s) (= %s %s))))' % (a, b, b, d))
for c in range(n):
    for r in range(n - 2):
        a, b, d = cell[r][c], cell[r + 1][c], cell[r + 2][c]
        lines.append('(assert (not (and (= %s %s) (= %s %s))))' % (a, b, b, d))

# Constraints for rows and columns to be distinct
for i in range(n):
    lines.append('(assert (distinct %s))'
                 % ' '.join(cell[i][j] for j in range(n)))
    lines.append('(assert (distinct %s))'
                 % ' '.join(cell[j][i] for j in range(n)))

lines.append('(check-sat)')
lines.append('(get-model)')

proc = subprocess.run(shlex.split(os.environ['SMT_SOLVER_CMD']),
                      input='\n'.join(lines).encode(), stdout=subprocess.PIPE)
out = proc.stdout.decode()
with open('output.txt', 'w') as f:
    if out.startswith('sat'):
        values = {}
        for r, c, v in re.findall(r'define-fun\s+b(\d+)_(\d+)\s+\(\)\s+Int\s+(\d+)', out):
            values[(int(r), int(c))] = v
        f.write('\n'.join(' '.join(values[(r, c)] for c in range(n))
                          for r in range(n)) + '\n')
    else:
        f.write('None\n')
