import itertools
import math

grid = [list(map(int, line.split()))
        for line in open('input.txt').read().splitlines() if line.strip()]
n = len(grid)
box = int(math.isqrt(n))

# every row candidate is a permutation of that row's missing values
row_options = []
for r in range(n):
    missing = sorted(set(range(1, n + 1)) - {v for v in grid[r] if v})
    holes = [c for c in range(n) if grid[r][c] == 0]
    options = []
    for perm in itertools.permutations(missing):
        row = list(grid[r])
        for c, v in zip(holes, perm):
            row[c] = v
        options.append(row)
    row_options.append(options)


def consistent(g):
    for c in range(n):
        col = [g[r][c] for r in range(n)]
        if len(set(col)) != n:
            return False
    for br in range(0, n, box):
        for bc in range(0, n, box):
            vals = [g[br + dr][bc + dc]
                    for dr in range(box) for dc in range(box)]
            if len(set(vals)) != n:
                return False
    return True


# cross product of per-row candidates, checked only when complete
for candidate in itertools.product(*row_options):
    if consistent(candidate):
        with open('output.txt', 'w') as f:
            f.write('\n'.join(' '.join(map(str, row))
                              for row in candidate) + '\n')
        break
