"""
Characteristic blocks and the Sturmian word
===========================================

A directive sequence such as ``1,3,2,2:2`` (head 1,3,2,2 then 2 forever)
fixes a standard sequence of blocks X_0, X_1, ...; each block from X_1 on
is a prefix of the next, and the limit is the characteristic Sturmian word.
"""

from sturmian import BlockTable, morphism_apply

table = BlockTable("1,3,2,2:2")

for i in range(5):
    print(f"X_{i} (q_{i} = {table.block_length(i):2d}): {table.block(i)}")

###############################################################################
# The same block comes out of composing the morphisms phi_{a_0} ... phi_{a_3}
# on the single letter 0.

w = "0"
for a in reversed([1, 3, 2, 2]):
    w = morphism_apply(a, w)
print(w == table.block(4))

###############################################################################
# Point queries walk down the block recurrence instead of building the prefix.

print(table.word_prefix(60))
print("".join(table.letter_at(n) for n in range(60)))
print(table.letter_at(10**12))
