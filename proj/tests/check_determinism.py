"""Run verify-all twice and require byte-identical documents and exit 0."""
import subprocess
import sys

tool = sys.argv[1]
extra = sys.argv[2:]
runs = [subprocess.run([tool, "verify-all", "--no-cache", *extra], capture_output=True) for _ in range(2)]
for r in runs:
    sys.stderr.write(r.stderr.decode())
    if r.returncode != 0:
        sys.exit(f"verify-all exited with {r.returncode}")
if runs[0].stdout != runs[1].stdout:
    sys.exit("verify-all documents differ between runs")
print(f"identical documents ({len(runs[0].stdout)} bytes)")
