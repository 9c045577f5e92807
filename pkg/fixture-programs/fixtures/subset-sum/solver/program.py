import os
import re
import shlex
import subprocess

with open('input.txt') as f:
    input_lines = f.readlines()
values = list(map(int, input_lines[0].split()))
target = int(input_lines[1])

# One boolean per element: whether it is part of the chosen subset
lines = []
for i in range(len(values)):
    lines.append('(declare-const a%d Bool)' % i)
terms = ' '.join('(ite a%d %d 0)' % (i, v) for i, v in enumerate(values))
lines.append('(assert (= (+ %s) %d))' % (terms, target))
lines.append('(check-sat)')
lines.append('(get-model)')

proc = subprocess.run(shlex.split(os.environ['SMT_SOLVER_CMD']),
                      input='\n'.join(lines).encode(), stdout=subprocess.PIPE)
out = proc.stdout.decode()
with open('output.txt', 'w') as f:
    if out.startswith('sat'):
        chosen = {}
        for name, flag in re.findall(r'define-fun\s+a(\d+)\s+\(\)\s+Bool\s+(true|false)', out):
            chosen[int(name)] = flag == 'true'
        picked = [str(v) for i, v in enumerate(values) if chosen.get(i)]
        f.write(' '.join(picked) + '\n')
    else:
        f.write('None\n')
