import os
import re
import shlex
import subprocess

grid = [list(map(int, line.split()))
        for line in open('input.txt').read().splitlines() if line.strip()]
n = len(grid)

# One variable per row: the column of that row's piece
lines = []
for r in range(n):
    lines.append('(declare-const q%d Int)' % r)
    lines.append('(assert (and (>= q%d 0) (< q%d %d)))' % (r, r, n))
for r in range(n):
    for c in range(n):
        if grid[r][c] == 1:
            lines.append('(assert (= q%d %d))' % (r, c))
lines.append('(assert (distinct %s))'
             % ' '.join('q%d' % r for r in range(n)))
# No two pieces on a shared diagonal
for i in range(n):
    for j in range(i + 1, n):
        d = j - i
        lines.append('(assert (not (= (- q%d q%d) %d)))' % (i, j, d))
        lines.append('(assert (not (= (- q%d q%d) %d)))' % (j, i, d))
lines.append('(check-sat)')
lines.append('(get-model)')

proc = subprocess.run(shlex.split(os.environ['SMT_SOLVER_CMD']),
                      input='\n'.join(lines).encode(), stdout=subprocess.PIPE)
out = proc.stdout.decode()
if out.startswith('sat'):
    cols = {}
    for r, c in re.findall(r'define-fun\s+q(\d+)\s+\(\)\s+Int\s+(\d+)', out):
        cols[int(r)] = int(c)
    rows = [' '.join('1' if cols[r] == c else '0' for c in range(n))
            for r in range(n)]
    open('output.txt', 'w').write('\n'.join(rows) + '\n')
