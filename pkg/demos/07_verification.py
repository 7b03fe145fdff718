"""Run every consistency check over a sweep of small types."""

from clusterbrick import cartan_of_type, coxeter_words, run_checks

SWEEP = [("A", 2), ("A", 3), ("B", 2), ("B", 3), ("G", 2)]

failures = 0
for family, rank in SWEEP:
    cartan = cartan_of_type(family, rank)
    for c in coxeter_words(cartan):
        for report in run_checks(cartan, c):
            status = "PASS" if report.passed else "FAIL"
            print(f"{status} {report.name:<10} {report.label} "
                  f"c={','.join(map(str, c))} ({report.elapsed:.2f}s)")
            if not report.passed:
                failures += 1
                print(f"  counterexample: {report.counterexample}")
print()
print(f"{failures} failures")
