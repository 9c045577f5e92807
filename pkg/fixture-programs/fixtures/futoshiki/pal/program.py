rows = [line.split() for line in open('input.txt').read().splitlines()
        if line.strip()]
n = len(rows[0])
grid = [list(map(int, row)) for row in rows[:n]]
constraints = [(int(a), int(b)) for a, b in rows[n:]]

row_used = [set(v for v in row if v) for row in grid]
col_used = [set(grid[r][c] for r in range(n) if grid[r][c]) for c in range(n)]
holes = [(r, c) for r in range(n) for c in range(n) if grid[r][c] == 0]


def value_at(k):
    return grid[k // n][k % n]


def orderings_ok():
    for x, y in constraints:
        vx, vy = value_at(x), value_at(y)
        if vx and vy and vx >= vy:
            return False
    return True


def backtrack(k):
    if k == len(holes):
        return True
    r, c = holes[k]
    for v in range(1, n + 1):
        if v in row_used[r] or v in col_used[c]:
            continue
        grid[r][c] = v
        row_used[r].add(v)
        col_used[c].add(v)
        if orderings_ok() and backtrack(k + 1):
            return True
        grid[r][c] = 0
        row_used[r].remove(v)
        col_used[c].remove(v)
    return False


if backtrack(0):
    with open('output.txt', 'w') as f:
        f.write('\n'.join(' '.join(map(str, row)) for row in grid) + '\n')
