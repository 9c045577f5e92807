grid = [list(map(int, line.split()))
        for line in open('input.txt').read().splitlines() if line.strip()]
n = len(grid)
half = n // 2
holes = [(r, c) for r in range(n) for c in range(n) if grid[r][c] == 0]


def prefix_ok(r, c):
    row = [v for v in grid[r] if v]
    if row.count(1) > half or row.count(2) > half:
        return False
    col = [grid[i][c] for i in range(n) if grid[i][c]]
    if col.count(1) > half or col.count(2) > half:
        return False
    if c >= 2 and grid[r][c] == grid[r][c - 1] == grid[r][c - 2] != 0:
        return False
    if r >= 2 and grid[r][c] == grid[r - 1][c] == grid[r - 2][c] != 0:
        return False
    return True


def board_ok():
    rows = [tuple(row) for row in grid]
    if len(set(rows)) != n:
        return False
    cols = [tuple(grid[r][c] for r in range(n)) for c in range(n)]
    return len(set(cols)) == n


def backtrack(k):
    if k == len(holes):
        return board_ok()
    r, c = holes[k]
    for v in (1, 2):
        grid[r][c] = v
        if prefix_ok(r, c) and backtrack(k + 1):
            return True
        grid[r][c] = 0
    return False


if backtrack(0):
    with open('output.txt', 'w') as f:
        f.write('\n'.join(' '.join(map(str, row)) for row in grid) + '\n')
