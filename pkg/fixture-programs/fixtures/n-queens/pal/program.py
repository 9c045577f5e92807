grid = [list(map(int, line.split()))
        for line in open('input.txt').read().splitlines() if line.strip()]
n = len(grid)

fixed = {}
for r in range(n):
    for c in range(n):
        if grid[r][c] == 1:
            fixed[r] = c

placed = [-1] * n


def attacked(r, c):
    for pr in range(r):
        pc = placed[pr]
        if pc == c or abs(pc - c) == r - pr:
            return True
    return False


def backtrack(r):
    if r == n:
        return True
    choices = [fixed[r]] if r in fixed else range(n)
    for c in choices:
        if attacked(r, c):
            continue
        placed[r] = c
        if backtrack(r + 1):
            return True
        placed[r] = -1
    return False


if backtrack(0):
    rows = [' '.join('1' if placed[r] == c else '0' for c in range(n))
            for r in range(n)]
    open('output.txt', 'w').write('\n'.join(rows) + '\n')
