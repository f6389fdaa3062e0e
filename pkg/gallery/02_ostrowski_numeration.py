"""
Ostrowski numeration
====================

Block lengths q_i form the place values of a numeration system.  For the
all-ones directive sequence the place values are Fibonacci numbers and the
representation is Zeckendorf's.
"""

from sturmian import BlockTable, decode, decompose_prefix, encode, shift

table = BlockTable("1,3,2,2:2")

for n in (21, 39, 59):
    print(n, encode(n, table))

fib = BlockTable(":1")
print("Zeckendorf 100 =", encode(100, fib))

###############################################################################
# The digits of n say how the length-n prefix splits into blocks.

parts = decompose_prefix(21, table)
print(parts)
print(" + ".join(table.block(i) * e for i, e in parts), "==", table.word_prefix(21))

###############################################################################
# Dropping the last digit moves to the tail sequence 3,2,2,... .

rest, d0 = shift(encode(21, table))
print(rest, "over", rest.alpha, "=", decode(rest), "; dropped digit", d0)
