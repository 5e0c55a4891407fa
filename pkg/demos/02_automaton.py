"""The pattern automaton behind the DP states.

A state is the length of the longest suffix of the text read so far that is
also a prefix of the pattern.  Reaching state r means the pattern occurred.
"""
from strec_lcs import ConstraintPattern, build_prefix_function

print("prefix function of 'ababaa':", build_prefix_function("ababaa"))

p = ConstraintPattern("aaba")
print("kmp of 'aaba':", p.prefix)
print("sigma('aabaaab') =", p.sigma_string("aabaaab"))

# lambda(k, a): one row per state, one column per pattern symbol.
table = p.transitions
print("\nstate | " + "  ".join(table.alphabet) + "  other")
for k in range(len(p)):
    row = [table[k, a] for a in table.alphabet]
    print(f"  {k}   | " + "  ".join(map(str, row)) + f"  {table[k, '?']}")

# Entries equal to r are the transitions the DP refuses to take.
print("\nfrom state 3, reading 'a' completes the pattern:", table[3, "a"] == len(p))
