def combinations_summing_to(array, target, start=0, path=[]):
    """Return every combination of array elements that adds up to target."""
    if target == 0:
        return [path]
    if target < 0:
        return []
    found = []
    for i in range(start, len(array)):
        if i > start and array[i] == array[i - 1]:
            continue
        found += combinations_summing_to(array, target - array[i],
                                         i + 1, path + [array[i]])
    return found


with open('input.txt') as f:
    input_lines = f.readlines()
array = list(map(int, input_lines[0].strip().split()))
target = int(input_lines[1].strip())

combinations = combinations_summing_to(array, target)

with open('output.txt', 'w') as f:
    if combinations:
        # the first combination found is as good as any
        f.write(' '.join(map(str, combinations[0])))
    else:
        f.write('None')
