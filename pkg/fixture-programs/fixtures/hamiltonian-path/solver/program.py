import os
import shlex
import subprocess

raw = [line.split() for line in open('input.txt').read().splitlines()
       if line.strip()]
n = int(raw[0][0])
edges = {(int(u), int(v)) for u, v in raw[1:]}
edges |= {(v, u) for u, v in edges}

# pos_v is the position of vertex v along the path
lines = []
for v in range(n):
    lines.append('(declare-const pos%d Int)' % v)
    lines.append('(assert (and (>= pos%d 0) (< pos%d %d)))' % (v, v, n))
lines.append('(assert (distinct %s))'
             % ' '.join('pos%d' % v for v in range(n)))
# vertices that are not adjacent cannot sit next to each other on the path
for u in range(n):
    for v in range(u + 1, n):
        if (u, v) not in edges:
            lines.append('(assert (not (= (- pos%d pos%d) 1)))' % (u, v))
            lines.append('(assert (not (= (- pos%d pos%d) 1)))' % (v, u))
lines.append('(check-sat)')

proc = subprocess.run(shlex.split(os.environ['SMT_SOLVER_CMD']),
                      input='\n'.join(lines).encode(), stdout=subprocess.PIPE)
out = proc.stdout.decode()
answer = 'YES' if out.startswith('sat') else 'NO'
open('output.txt', 'w').write(answer + '\n')
