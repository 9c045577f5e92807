numbers = [int(x) for x in open('input.txt').read().split()]
# this unpacking assumes the whole input is just two numbers
values, target = numbers

chosen = []
remaining = target
for v in sorted(values, reverse=True):
    if v <= remaining:
        chosen.append(v)
        remaining -= v

with open('output.txt', 'w') as f:
    if remaining == 0:
        f.write(' '.join(map(str, chosen)))
    else:
        f.write('None')
