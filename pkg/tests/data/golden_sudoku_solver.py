import math
import os
import re
import shlex
import subprocess

grid = [list(map(int, line.split()))
        for line in open('input.txt').read().splitlines() if line.strip()]
n = len(grid)
box = int(math.isqrt(n))

lines = []
for r in range(n):
    for c in range(n):
        lines.append('(declare-const x%d_%d Int)' % (r, c))
for r in range(n):
    for c in range(n):
        if grid[r][c]:
            lines.append('(assert (= x%d_%d %d))' % (r, c, grid[r][c]))
        else:
            lines.append('(assert (and (>= x%d_%d 1) (<= x%d_%d %d)))'
                         % (r, c, r, c, n))
for r in range(n):
    lines.append('(assert (distinct %s))'
                 % ' '.join('x%d_%d' % (r, c) for c in range(n)))
for c in range(n):
    lines.append('(assert (distinct %s))'
                 % ' '.join('x%d_%d' % (r, c) for r in range(n)))
for br in range(0, n, box):
    for bc in range(0, n, box):
        cells = ['x%d_%d' % (br + dr, bc + dc)
                 for dr in range(box) for dc in range(box)]
        lines.append('(assert (distinct %s))' % ' '.join(cells))
lines.append('(check-sat)')
lines.append('(get-model)')
script = '\n'.join(lines) + '\n'

cmd = shlex.split(os.environ['SMT_SOLVER_CMD'])
proc = subprocess.run(cmd, input=script.encode(), stdout=subprocess.PIPE)
out = proc.stdout.decode()
if not out.startswith('sat'):
    raise SystemExit('solver said: ' + out.splitlines()[0])

values = {}
for r, c, v in re.findall(r'define-fun\s+x(\d+)_(\d+)\s+\(\)\s+Int\s+(\d+)', out):
    values[(int(r), int(c))] = int(v)
solution = [[values[(r, c)] for c in range(n)] for r in range(n)]
with open('output.txt', 'w') as f:
    f.write('\n'.join(' '.join(map(str, row)) for row in solution) + '\n')
