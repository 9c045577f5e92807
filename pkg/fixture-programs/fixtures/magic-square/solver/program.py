import os
import re
import shlex
import subprocess

grid = [list(map(int, line.split()))
        for line in open('input.txt').read().splitlines() if line.strip()]
n = len(grid)
target = n * (n * n + 1) // 2

names = [['v%d_%d' % (r, c) for c in range(n)] for r in range(n)]
lines = []
for r in range(n):
    for c in range(n):
        lines.append('(declare-const %s Int)' % names[r][c])
        if grid[r][c]:
            lines.append('(assert (= %s %d))' % (names[r][c], grid[r][c]))
        else:
            lines.append('(assert (and (>= %s 1) (<= %s %d)))'
                         % (names[r][c], names[r][c], n * n))
# The board is a permutation of 1..n*n
lines.append('(assert (distinct %s))'
             % ' '.join(names[r][c] for r in range(n) for c in range(n)))
# Rows, columns and both diagonals share the magic sum
for r in range(n):
    lines.append('(assert (= (+ %s) %d))' % (' '.join(names[r]), target))
for c in range(n):
    lines.append('(assert (= (+ %s) %d))'
                 % (' '.join(names[r][c] for r in range(n)), target))
lines.append('(assert (= (+ %s) %d))'
             % (' '.join(names[i][i] for i in range(n)), target))
lines.append('(assert (= (+ %s) %d))'
             % (' '.join(names[i][n - 1 - i] for i in range(n)), target))
lines.append('(check-sat)')
lines.append('(get-model)')

proc = subprocess.run(shlex.split(os.environ['SMT_SOLVER_CMD']),
                      input='\n'.join(lines).encode(), stdout=subprocess.PIPE)
out = proc.stdout.decode()
if out.startswith('sat'):
    values = {}
    for r, c, v in re.findall(r'define-fun\s+v(\d+)_(\d+)\s+\(\)\s+Int\s+(\d+)', out):
        values[(int(r), int(c))] = v
    rows = [' '.join(values[(r, c)] for c in range(n)) for r in range(n)]
    open('output.txt', 'w').write('\n'.join(rows) + '\n')
