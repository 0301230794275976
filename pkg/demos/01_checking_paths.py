"""Building an instance, checking candidate paths and writing the file format."""

from pafp import PafpInstance, check_path, parse_instance, serialize_instance, solve_exact

# Four routes leave s=1, they all meet at 5 and then go on to t=6.
# Vertex 3 and the target may not both be used.
inst = PafpInstance.build(6, [(1, 2), (1, 3), (1, 4), (2, 5), (3, 5), (4, 5), (5, 6)], 1, 6, [(3, 6)])

for candidate in ([1, 2, 5, 6], [1, 3, 5, 6], [1, 5, 6], [2, 5, 6]):
    report = check_path(inst, candidate)
    print(f"{' '.join(map(str, candidate)):<10} -> {report}")

# A report also carries the individual flags
print(check_path(inst, [1, 3, 5, 6]).to_dict())

# Plain-text format: header, source, target, arcs, pairs
text = serialize_instance(inst)
print(text)
assert parse_instance(text) == inst

# Exhaustive search finds the first safe path in ascending neighbour order
print("oracle:", solve_exact(inst))
