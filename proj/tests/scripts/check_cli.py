"""Exit codes and outputs of the level1kit subcommands."""

import json
import os
import subprocess
import sys
import tempfile

cli, data = sys.argv[1], sys.argv[2]
failures = []


def run(*args):
    return subprocess.run([cli, *args], capture_output=True, text=True)


def expect(args, code, contains=None):
    p = run(*args)
    if p.returncode != code or (contains is not None and contains not in p.stdout):
        failures.append(f"{' '.join(args)}: exit {p.returncode}\n{p.stdout}{p.stderr}")
    return p


def path(name):
    return os.path.join(data, name)


stats = json.loads(expect(["stats", path("simple3.nwk")], 0).stdout)
for key, want in {"n": 3, "V": 7, "A": 7, "g": 1, "c": 0, "simple": True, "four_outwards": False}.items():
    if stats.get(key) != want:
        failures.append(f"stats {key}={stats.get(key)} expected {want}")

expect(["validate", path("sixteen_triplets.nwk")], 0, "valid")
expect(["equiv", path("sixteen_triplets.nwk"), path("sixteen_triplets.nwk")], 0)
expect(["equiv", path("sixteen_triplets.nwk"), path("eleven_clusters.nwk")], 1)
with open(path("sixteen_triplets.trip")) as f:
    want = f.read()
if expect(["triplets", path("sixteen_triplets.nwk")], 0).stdout != want:
    failures.append("triplets output differs from sixteen_triplets.trip")
with open(path("eleven_clusters.clus")) as f:
    want = f.read()
if expect(["clusters", path("eleven_clusters.nwk"), "--softwired"], 0).stdout != want:
    failures.append("clusters output differs from eleven_clusters.clus")
expect(["clusters", path("simple3.nwk"), "--hardwired"], 0, "x1,x2\n")
expect(["clusters", path("simple3.nwk"), "--hardwired", "--softwired"], 2)
expect(["snsets", path("eleven_clusters.nwk")], 0, "x2,x3,x4,x5\n")
expect(["cut", path("eleven_clusters.nwk")], 0, "x1\nx2,x3,x4,x5\n")
expect(["collapse", path("eleven_clusters.nwk")], 0, "(x1,x2);")
expect(["restrict", path("eleven_clusters.nwk"), "--keep", "x1,x2,x5"], 0, "((x2,x5),x1);")
expect(["restrict", path("eleven_clusters.nwk"), "--keep", "x1"], 2)
expect(["restrict", path("eleven_clusters.nwk"), "--keep", "x1,nope"], 2)

p = expect(["enumerate", "--n", "4"], 0)
if len(p.stdout.splitlines()) != 153:
    failures.append("enumerate --n 4 did not list 153 networks")
p = expect(["enumerate", "--n", "5", "--filter", "simple"], 0)
if len(p.stdout.splitlines()) != 300:
    failures.append("enumerate --n 5 --filter simple did not list 300 networks")
expect(["enumerate", "--n", "8"], 2)
expect(["enumerate", "--n", "4", "--filter", "wiggly"], 2)

expect(["check-defines", path("sixteen_triplets.nwk"), "--system", path("sixteen_triplets.trip"), "--kind", "triplets"], 0, "defines")
expect(["check-defines", path("eleven_clusters.nwk"), "--system", path("eleven_clusters.clus"), "--kind", "clusters"], 1)
with tempfile.TemporaryDirectory() as tmp:
    for kind, ext in (("triplets", "trip"), ("clusters", "clus")):
        sysfile = os.path.join(tmp, f"d.{ext}")
        with open(sysfile, "w") as f:
            f.write(expect(["define", path("sixteen_triplets.nwk"), "--kind", kind], 0).stdout)
        expect(["check-defines", path("sixteen_triplets.nwk"), "--system", sysfile, "--kind", kind], 0)
    bad = os.path.join(tmp, "bad.nwk")
    with open(bad, "w") as f:
        f.write("((a,#H1),(b,#H1),?")
    expect(["validate", bad], 2)
expect(["define", path("eleven_clusters.nwk"), "--kind", "triplets"], 2)

expect(["verify", "--suite", "five-triplets"], 0, "PASS five-triplets")
expect(["verify", "--suite", "nope"], 2)
expect(["validate", path("missing.nwk")], 2)
expect([], 2)
expect(["bogus"], 2)

if failures:
    print("\n".join(failures))
    sys.exit(1)
print("cli checks passed")
