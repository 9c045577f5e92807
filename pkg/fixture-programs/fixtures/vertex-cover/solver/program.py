import os
import shlex
import subprocess

raw = [line.split() for line in open('input.txt').read().splitlines()
       if line.strip()]
n, k = int(raw[0][0]), int(raw[0][1])
edges = [(int(u), int(v)) for u, v in raw[1:]]

lines = []
for v in range(n):
    lines.append('(declare-const pick%d Bool)' % v)
# every edge needs a chosen endpoint
for u, v in edges:
    lines.append('(assert (or pick%d pick%d))' % (u, v))
# at most k vertices may be chosen
count = ' '.join('(ite pick%d 1 0)' % v for v in range(n))
lines.append('(assert (<= (+ %s) %d))' % (count, k))
lines.append('(check-sat)')

proc = subprocess.run(shlex.split(os.environ['SMT_SOLVER_CMD']),
                      input='\n'.join(lines).encode(), stdout=subprocess.PIPE)
out = proc.stdout.decode()
answer = 'YES' if out.startswith('sat') else 'NO'
open('output.txt', 'w').write(answer + '\n')
