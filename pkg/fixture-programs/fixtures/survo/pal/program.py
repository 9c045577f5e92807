rows = [list(map(int, line.split()))
        for line in open('input.txt').read().splitlines() if line.strip()]
m = len(rows) - 1
n = len(rows[-1])
grid = [row[:n] for row in rows[:m]]
row_sums = [row[n] for row in rows[:m]]
col_sums = rows[m]

used = {v for row in grid for v in row if v}
holes = [(r, c) for r in range(m) for c in range(n) if grid[r][c] == 0]


def partial_ok(r, c):
    filled_row = [v for v in grid[r] if v]
    if sum(filled_row) > row_sums[r]:
        return False
    if len(filled_row) == n and sum(filled_row) != row_sums[r]:
        return False
    col = [grid[i][c] for i in range(m) if grid[i][c]]
    if sum(col) > col_sums[c]:
        return False
    if len(col) == m and sum(col) != col_sums[c]:
        return False
    return True


def backtrack(k):
    if k == len(holes):
        return True
    r, c = holes[k]
    for v in range(1, m * n + 1):
        if v in used:
            continue
        grid[r][c] = v
        used.add(v)
        if partial_ok(r, c) and backtrack(k + 1):
            return True
        grid[r][c] = 0
        used.remove(v)
    return False


if backtrack(0):
    with open('output.txt', 'w') as f:
        f.write('\n'.join(' '.join(map(str, row)) for row in grid) + '\n')
