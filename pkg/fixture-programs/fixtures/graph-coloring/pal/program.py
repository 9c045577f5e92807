raw = [line.split() for line in open('input.txt').read().splitlines()
       if line.strip()]
node_count, color_count = int(raw[0][0]), int(raw[0][1])
edges = [(int(u), int(v)) for u, v in raw[1:]]

neighbors = [[] for _ in range(node_count)]
for u, v in edges:
    neighbors[u].append(v)
    neighbors[v].append(u)

colors = [-1] * node_count


def backtrack(v):
    if v == node_count:
        return True
    for color in range(color_count):
        if any(colors[w] == color for w in neighbors[v]):
            continue
        colors[v] = color
        if backtrack(v + 1):
            return True
        colors[v] = -1
    return False


if backtrack(0):
    open('output.txt', 'w').write(' '.join(map(str, colors)) + '\n')
