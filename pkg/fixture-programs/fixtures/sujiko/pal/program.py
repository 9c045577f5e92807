import itertools

rows = [line.split() for line in open('input.txt').read().splitlines()
        if line.strip()]
n = len(rows[0])
grid = [list(map(int, row)) for row in rows[:n]]
sums = [list(map(int, row)) for row in rows[n:]]

given = {v for row in grid for v in row if v}
missing = [v for v in range(1, n * n + 1) if v not in given]
holes = [(r, c) for r in range(n) for c in range(n) if grid[r][c] == 0]


def blocks_ok():
    for r in range(n - 1):
        for c in range(n - 1):
            block = (grid[r][c] + grid[r][c + 1]
                     + grid[r + 1][c] + grid[r + 1][c + 1])
            if block != sums[r][c]:
                return False
    return True


for perm in itertools.permutations(missing):
    for (r, c), v in zip(holes, perm):
        grid[r][c] = v
    if blocks_ok():
        with open('output.txt', 'w') as f:
            f.write('\n'.join(' '.join(map(str, row)) for row in grid) + '\n')
        break
