"""Differential testing against the brute-force oracle, with shrinking."""
from strec_lcs.difftest import InstanceSpec, generate_instance, run_campaign, shrink

spec = InstanceSpec(max_n=8, max_m=8, max_r=3, alphabet="ab", seed=1, trials=2000)
print("trial 0:", generate_instance(spec, 0))

clean = run_campaign(spec, ["naive", "optimized"])
print(f"corrected DP: {len(clean)} discrepancies in {spec.trials} trials")

found = run_campaign(spec, ["chen-chao-1", "chen-chao-2"])
print(f"Chen-Chao:    {len(found)} discrepancies in {spec.trials} trials")

first = found[0]
print("\nfirst failure:", first.x, first.y, first.p, "oracle", first.expected, "reported", first.reported)
small = shrink(first)
print("shrunk to:    ", small.x, small.y, small.p, "oracle", small.expected, "reported", small.reported)
