# The byte-vector comparison primitive.
#
# block_compare(t, i, p, j, width) lines up `width` text bytes starting at
# t[i + j - 1] against `width` copies of p[j] and returns one bit per byte.
from blockmatch import block_compare, capability_probe, popcount

print("available widths:", sorted(capability_probe()))

t = b"aabcd" + b"." * 27
p = b"abcd"

# One mask per pattern position; bit k speaks for the alignment starting at i + k.
for j in range(1, len(p) + 1):
    mask = block_compare(t, 1, p, j, 8)
    bits = f"{mask:08b}"[::-1]
    print(f"p[{j}] = {chr(p[j - 1])!r}: {bits}  (bit 0 first)")

# AND-ing the masks leaves the alignments that matched every position.
found = 0xFF
for j in range(1, len(p) + 1):
    found &= block_compare(t, 1, p, j, 8)
print("found =", bin(found), "-> occurrences in this block:", popcount(found, 8))

# Wider blocks agree with the narrow one on their low bits.
for width in sorted(capability_probe()):
    print(width, bin(block_compare(t, 1, p, 1, width)))
