import os
import re
import shlex
import subprocess

raw = [line.split() for line in open('input.txt').read().splitlines()
       if line.strip()]
node_count, color_count = int(raw[0][0]), int(raw[0][1])
edges = [(int(u), int(v)) for u, v in raw[1:]]

# Colour variables for each vertex, in the range [0, K)
lines = []
for v in range(node_count):
    lines.append('(declare-const c%d Int)' % v)
    lines.append('(assert (and (>= c%d 0) (< c%d %d)))' % (v, v, color_count))
# Adjacent vertices must have different colours
for u, v in edges:
    lines.append('(assert (not (= c%d c%d)))' % (u, v))
lines.append('(check-sat)')
lines.append('(get-model)')

proc = subprocess.run(shlex.split(os.environ['SMT_SOLVER_CMD']),
                      input='\n'.join(lines).encode(), stdout=subprocess.PIPE)
out = proc.stdout.decode()
if out.startswith('sat'):
    colors = {}
    for name, value in re.findall(r'define-fun\s+c(\d+)\s+\(\)\s+Int\s+(\d+)', out):
        colors[int(name)] = value
    open('output.txt', 'w').write(
        ' '.join(colors[v] for v in range(node_count)) + '\n')
