#!/usr/bin/env python3
"""End-to-end checks of the gapforge command line: exit codes, report
determinism, and oracle output shapes. Usage: run_cli_tests.py <cli-path>."""

import json
import math
import os
import subprocess
import sys
import tempfile

FAILURES = []


def run(cli, *args, expect=0):
    proc = subprocess.run([cli, *args], capture_output=True, text=True)
    if proc.returncode != expect:
        FAILURES.append(
            f"{' '.join(args)}: exit {proc.returncode}, expected {expect}\n"
            f"stderr: {proc.stderr.strip()[:400]}"
        )
    return proc


def complex_matrix(rows):
    return [[{"re": float(v.real), "im": float(v.imag)} for v in row] for row in rows]


def write_json(directory, name, payload):
    path = os.path.join(directory, name)
    with open(path, "w", encoding="utf-8") as handle:
        json.dump(payload, handle)
    return path


def so3_system(directory):
    l12 = [[0, -1, 0], [1, 0, 0], [0, 0, 0]]
    l13 = [[0, 0, -1], [0, 0, 0], [1, 0, 0]]
    l23 = [[0, 0, 0], [0, 0, -1], [0, 1, 0]]
    payload = {
        "n": 3,
        "drift": complex_matrix(l12),
        "controls": [complex_matrix(l13), complex_matrix(l23)],
    }
    return write_json(directory, "so3.json", payload)


def su2_single_control(directory):
    drift = [[1j, 0], [0, -1j]]
    control = [[0, 1j], [1j, 0]]
    payload = {
        "n": 2,
        "drift": complex_matrix(drift),
        "controls": [complex_matrix(control)],
    }
    return write_json(directory, "su2_one.json", payload)


def main():
    if len(sys.argv) != 2:
        print("usage: run_cli_tests.py <cli-path>")
        return 2
    cli = sys.argv[1]

    with tempfile.TemporaryDirectory(prefix="gapforge_cli_") as tmp:
        so3 = so3_system(tmp)
        su2 = su2_single_control(tmp)

        # analyze: certified values on stdout
        proc = run(cli, "analyze", so3, "--skip-estimate")
        if proc.returncode == 0:
            report = json.loads(proc.stdout)
            if report["certificate"]["kind"] != "reducible":
                FAILURES.append("so3 certificate kind is not reducible")
            if abs(report["certificate"]["diameter_bound"] - math.sqrt(2)) > 1e-9:
                FAILURES.append("so3 diameter bound is not sqrt(2)")
            if abs(report["T_lower"] - math.pi / 2) > 1e-9:
                FAILURES.append("so3 time bound is not pi/2")

        # analyze: file output is byte-identical across reruns with a seed
        out1 = os.path.join(tmp, "r1.json")
        out2 = os.path.join(tmp, "r2.json")
        run(cli, "analyze", so3, "--report", out1, "--starts", "4", "--seed", "11")
        run(cli, "analyze", so3, "--report", out2, "--starts", "4", "--seed", "11")
        if os.path.exists(out1) and os.path.exists(out2):
            with open(out1, "rb") as h1, open(out2, "rb") as h2:
                if h1.read() != h2.read():
                    FAILURES.append("reports differ between identical seeded runs")

        # input errors exit with 2
        run(cli, "analyze", os.path.join(tmp, "missing.json"), expect=2)
        bad = write_json(tmp, "bad.json", {"n": 2})
        run(cli, "analyze", bad, expect=2)
        notskew = write_json(
            tmp,
            "notskew.json",
            {
                "n": 2,
                "drift": complex_matrix([[1, 0], [0, 1]]),
                "controls": [complex_matrix([[0, 1j], [1j, 0]])],
            },
        )
        run(cli, "analyze", notskew, expect=2)
        run(cli, "analyze", so3, "--skip-estimate", "--tensor", "2", "2", expect=2)
        run(
            cli, "analyze", so3, "--skip-estimate",
            "--tensor", "3", "1", "--wedge", "4", "2", expect=2,
        )
        run(cli, "badcommand", expect=2)
        run(cli, expect=2)
        run(cli, "--help")

        # write failures exit with 3
        if os.path.exists("/dev/full"):
            run(cli, "analyze", so3, "--skip-estimate", "--report", "/dev/full", expect=3)

        # determinant-sum oracle: deterministic, capped
        p1 = run(cli, "oracle", "det-sum", "--k", "2", "--samples", "2000", "--grid", "101")
        p2 = run(cli, "oracle", "det-sum", "--k", "2", "--samples", "2000", "--grid", "101")
        if p1.returncode == 0 and p2.returncode == 0:
            if p1.stdout != p2.stdout:
                FAILURES.append("det-sum oracle output is not deterministic")
            stats = json.loads(p1.stdout)
            if stats["sampled_max"] > 1.0 + 1e-9:
                FAILURES.append("det-sum sampled max above 1")
            if abs(stats["grid_max"] - 1.0) > 1e-9:
                FAILURES.append("det-sum grid max is not 1")
            if abs(stats["stationary_value"] - 1.0) > 1e-12:
                FAILURES.append("det-sum stationary value for k=2 is not 1")
        run(cli, "oracle", "det-sum", "--k", "1", expect=2)

        # tensor oracle honors the cap
        proc = run(cli, "oracle", "tensor-bound", "--samples", "5000")
        if proc.returncode == 0:
            stats = json.loads(proc.stdout)
            if stats["max_overlap"] > stats["cap"] + 1e-12:
                FAILURES.append("tensor oracle exceeded the cap")

        # trace respects the drift-speed bound
        sched = write_json(
            tmp,
            "sched.json",
            {"segments": [{"duration": 1.2, "u": [1.0]}, {"duration": 1.2, "u": [-1.0]}]},
        )
        proc = run(cli, "trace", su2, "--controls", sched, "--horizon", "2", "--samples", "20")
        if proc.returncode == 0:
            trace = json.loads(proc.stdout)
            if trace["max_violation"] > 0.01:
                FAILURES.append("trace violated the drift-speed bound")
            if len(trace["points"]) != 20:
                FAILURES.append("trace sample count mismatch")
        short = write_json(
            tmp, "short.json", {"segments": [{"duration": 0.5, "u": [1.0]}]}
        )
        run(cli, "trace", su2, "--controls", short, "--horizon", "2", "--samples", "5", expect=2)

    if FAILURES:
        print("cli tests: FAIL")
        for failure in FAILURES:
            print(" -", failure)
        return 1
    print("cli tests: all passed")
    return 0


if __name__ == "__main__":
    sys.exit(main())
