import os
import re
import shlex
import subprocess

rows = [list(map(int, line.split()))
        for line in open('input.txt').read().splitlines() if line.strip()]
m = len(rows) - 1
n = len(rows[-1])
grid = [row[:n] for row in rows[:m]]
row_sums = [row[n] for row in rows[:m]]
col_sums = rows[m]

lines = []
for r in range(m):
    for c in range(n):
        lines.append('(declare-const v%d_%d Int)' % (r, c))
        if grid[r][c]:
            lines.append('(assert (= v%d_%d %d))' % (r, c, grid[r][c]))
        else:
            lines.append('(assert (and (>= v%d_%d 1) (<= v%d_%d %d)))'
                         % (r, c, r, c, m * n))
# every number from 1 to m*n appears exactly once
lines.append('(assert (distinct %s))'
             % ' '.join('v%d_%d' % (r, c)
                        for r in range(m) for c in range(n)))
# rows and columns must reach their required sums
for r in range(m):
    lines.append('(assert (= (+ %s) %d))'
                 % (' '.join('v%d_%d' % (r, c) for c in range(n)),
                    row_sums[r]))
for c in range(n):
    lines.append('(assert (= (+ %s) %d))'
                 % (' '.join('v%d_%d' % (r, c) for r in range(m)),
                    col_sums[c]))
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
                     for r in range(m))
    open('output.txt', 'w').write(text + '\n')
