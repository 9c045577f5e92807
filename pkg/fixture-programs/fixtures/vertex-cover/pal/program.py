import itertools

raw = [line.split() for line in open('input.txt').read().splitlines()
       if line.strip()]
n, k = int(raw[0][0]), int(raw[0][1])
edges = [(int(u), int(v)) for u, v in raw[1:]]

found = False
for size in range(k + 1):
    for cover in itertools.combinations(range(n), size):
        chosen = set(cover)
        if all(u in chosen or v in chosen for u, v in edges):
            found = True
            break
    if found:
        break

open('output.txt', 'w').write(('YES' if found else 'NO') + '\n')
