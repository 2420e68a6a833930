# Comparison orders: which pattern byte to check first.
from blockmatch import FrequencyTable, frequency_order, identity_order, pi_h_order, pi_hs_order
from blockmatch.corpus import load_fixture

english = load_fixture("english")
table = FrequencyTable.from_text(english.text)

pattern = b"the quick"
print("identity :", identity_order(len(pattern)))
print("pi_h     :", pi_h_order(len(pattern)))
print("pi_hs    :", pi_hs_order(pattern))
order = frequency_order(pattern, table)
print("frequency:", order, "->", bytes(pattern[j - 1] for j in order))

# The rarest bytes come first; the space goes last because it is the most common byte.
for j in order:
    print(f"  {chr(pattern[j - 1])!r}: {table.counts[pattern[j - 1]]}")

# Tables are plain text, 256 lines of "byte count".
table.save("/tmp/english.freq")
assert FrequencyTable.load("/tmp/english.freq") == table
