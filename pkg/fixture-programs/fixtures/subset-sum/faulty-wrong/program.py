with open('input.txt') as f:
    input_lines = f.readlines()
values = list(map(int, input_lines[0].split()))
target = int(input_lines[1])

# greedy: keep taking the smallest element that still fits
chosen = []
total = 0
for v in sorted(values):
    if total + v <= target:
        chosen.append(v)
        total += v

with open('output.txt', 'w') as f:
    if chosen:
        f.write(' '.join(map(str, chosen)))
    else:
        f.write('None')
