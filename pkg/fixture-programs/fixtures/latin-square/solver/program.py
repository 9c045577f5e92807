import os
import re
import shlex
import subprocess

grid = [list(map(int, line.split()))
        for line in open('input.txt').read().splitlines() if line.strip()]
n = len(grid)

lines = []
# Declare one integer per cell and pin the given values
for r in range(n):
    for c in range(n):
        lines.append('(declare-const v%d_%d Int)' % (r, c))
        if grid[r][c]:
            lines.append('(assert (= v%d_%d %d))' % (r, c, grid[r][c]))
        else:
            lines.append('(assert (and (>= v%d_%d 1) (<= v%d_%d %d)))'
                         % (r, c, r, c, n))
# Every row and every column holds each number exactly once
for r in range(n):
    lines.append('(assert (distinct %s))'
                 % ' '.join('v%d_%d' % (r, c) for c in range(n)))
for c in range(n):
    lines.append('(assert (distinct %s))'
                 % ' '.join('v%d_%d' % (r, c) for r in range(n)))
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
