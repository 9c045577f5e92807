raw = [line.split() for line in open('input.txt').read().splitlines()
       if line.strip()]
n = int(raw[0][0])
adjacent = [[False] * n for _ in range(n)]
for u, v in raw[1:]:
    adjacent[int(u)][int(v)] = True
    adjacent[int(v)][int(u)] = True


def extend(path, used):
    if len(path) == n:
        return True
    for w in range(n):
        if not used[w] and adjacent[path[-1]][w]:
            used[w] = True
            path.append(w)
            if extend(path, used):
                return True
            path.pop()
            used[w] = False
    return False


found = False
for start in range(n):
    used = [False] * n
    used[start] = True
    if extend([start], used):
        found = True
        break

open('output.txt', 'w').write(('YES' if found else 'NO') + '\n')
