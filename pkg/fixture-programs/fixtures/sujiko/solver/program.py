import os
import re
import shlex
import subprocess

rows = [line.split() for line in open('input.txt').read().splitlines()
        if line.strip()]
n = len(rows[0])
grid = [list(map(int, row)) for row in rows[:n]]
sums = [list(map(int, row)) for row in rows[n:]]

lines = []
for r in range(n):
    for c in range(n):
        lines.append('(declare-const v%d_%d Int)' % (r, c))
        if grid[r][c]:
            lines.append('(assert (= v%d_%d %d))' % (r, c, grid[r][c]))
        else:
            lines.append('(assert (and (>= v%d_%d 1) (<= v%d_%d %d)))'
                         % (r, c, r, c, n * n))
# the board is a permutation of 1..n*n
lines.append('(assert (distinct %s))'
             % ' '.join('v%d_%d' % (r, c)
                        for r in range(n) for c in range(n)))
# every 2x2 block adds up to its required sum
for r in range(n - 1):
    for c in range(n - 1):
        block = '(+ v%d_%d v%d_%d v%d_%d v%d_%d)' % (
            r, c, r, c + 1, r + 1, c, r + 1, c + 1)
        lines.append('(assert (= %s %d))' % (block, sums[r][c]))
lines.append('(check-sat)')
lines.append('(get-model)')

proc = subprocess.run(shlex.split(os.environ['SMT_SOLVER_CMD']),
                      input='\n'.join(lines).encode(), stdout=subprocess.PIPE)
out = proc.stdout.decode()
if out.startswith('sat'):
    values = {}
    for r, c, v in re.findall(r'define-fun\s+v(\d+)_(\d+)\s+\(\)\s+Int\s+(\d+)', out):
        values[(int(r), int(c))] = v
    text = '\n'.join(' '.join(values[(r, c)] for c in range(n))
                     for r in range(n))
    open('output.txt', 'w').write(text + '\n')
