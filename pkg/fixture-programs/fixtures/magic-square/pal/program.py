import itertools

grid = [list(map(int, line.split()))
        for line in open('input.txt').read().splitlines() if line.strip()]
n = len(grid)
target = n * (n * n + 1) // 2

given = {v for row in grid for v in row if v}
missing = [v for v in range(1, n * n + 1) if v not in given]
holes = [(r, c) for r in range(n) for c in range(n) if grid[r][c] == 0]


def sums_ok(g):
    for r in range(n):
        if sum(g[r]) != target:
            return False
    for c in range(n):
        if sum(g[r][c] for r in range(n)) != target:
            return False
    if sum(g[i][i] for i in range(n)) != target:
        return False
    return sum(g[i][n - 1 - i] for i in range(n)) == target


for perm in itertools.permutations(missing):
    for (r, c), v in zip(holes, perm):
        grid[r][c] = v
    if sums_ok(grid):
        with open('output.txt', 'w') as f:
            f.write('\n'.join(' '.join(map(str, row)) for row in grid) + '\n')
        break
