"""Replaying the linear algebra behind the boundary-class arguments."""
from spinmoduli.relations import replay_independence_s1211, replay_kernel_s13110

cert = replay_independence_s1211()
print(f"{cert.name}: rank {cert.dimension}, passed {cert.passed}")
print("  " + "\n  ".join(cert.notes))

cert = replay_kernel_s13110()
print(f"\n{cert.name}: kernel of dimension {cert.dimension} spanned by {cert.basis_labels}")
for c in cert.constraints:
    print(f"  {c['statement']:<6} from {c['anchor']}")

# a weaker constraint system no longer pins the kernel down
weak = replay_kernel_s13110(drop=("c2=a",))
print(f"\nwithout c2 = a: {weak.solution_dimension} free parameters, passed {weak.passed}")
print("  " + weak.notes[1])
