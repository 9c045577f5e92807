import math

grid = [list(map(int, line.split()))
        for line in open('input.txt').read().splitlines() if line.strip()]
n = len(grid)
box = int(math.isqrt(n))

row_used = [set(v for v in row if v) for row in grid]
col_used = [set(grid[r][c] for r in range(n) if grid[r][c]) for c in range(n)]
box_used = {}
for r in range(n):
    for c in range(n):
        key = (r // box, c // box)
        box_used.setdefault(key, set())
        if grid[r][c]:
            box_used[key].add(grid[r][c])
holes = [(r, c) for r in range(n) for c in range(n) if grid[r][c] == 0]


def backtrack(k):
    if k == len(holes):
        return True
    r, c = holes[k]
    key = (r // box, c // box)
    for v in range(1, n + 1):
        if v in row_used[r] or v in col_used[c] or v in box_used[key]:
            continue
        grid[r][c] = v
        row_used[r].add(v)
        col_used[c].add(v)
        box_used[key].add(v)
        if backtrack(k + 1):
            return True
        grid[r][c] = 0
        row_used[r].remove(v)
        col_used[c].remove(v)
        box_used[key].remove(v)
    return False


if backtrack(0):
    with open('output.txt', 'w') as f:
        f.write('\n'.join(' '.join(map(str, row)) for row in grid) + '\n')
