"""
Local periods from Ostrowski digits
===================================

The local period at position n is the length of the shortest word starting
at n that agrees with everything to its left.  It can be found by brute
force, or read off the digits of n + 1: count trailing zeros t, and bump t
by one when the last nonzero digit is 1 and it sits an even number of zeros
after the digit before it.
"""

from sturmian import BlockTable, encode, local_period_fast, local_period_oracle

table = BlockTable("1,3,2,2:2")

for n in range(23, 27):
    fast = local_period_fast(table, n)
    word = local_period_oracle(table, n)
    print(f"n={n}  digits(n+1)={encode(n + 1, table)}  "
          f"X_{fast.block_index}={table.block(fast.block_index)}  shortest={word}")

###############################################################################
# The Fibonacci word: every local period is a Fibonacci number, and the
# period reaches n + 1 exactly one step before each block length.

fib = BlockTable(":1")
print([local_period_fast(fib, n).period for n in range(21)])

###############################################################################
# Both routes agree across a long stretch.

bad = [n for n in range(3000)
       if local_period_fast(table, n).period != len(local_period_oracle(table, n))]
print("disagreements:", bad)
