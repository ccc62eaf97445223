#!/usr/bin/env python3
"""Solve an LP file with HiGHS and write `<variable> <value>` lines.

usage: highs_solve.py MODEL.lp SOLUTION.sol [time_limit_seconds]
Exit status is non-zero when no feasible solution is available.
"""
import sys

import highspy


def main() -> int:
    if len(sys.argv) < 3:
        print(__doc__, file=sys.stderr)
        return 2
    lp_path, sol_path = sys.argv[1], sys.argv[2]
    h = highspy.Highs()
    h.setOptionValue("output_flag", False)
    h.setOptionValue("mip_rel_gap", 0.0)
    h.setOptionValue("mip_abs_gap", 0.0)
    if len(sys.argv) > 3:
        h.setOptionValue("time_limit", float(sys.argv[3]))
    if h.readModel(lp_path) != highspy.HighsStatus.kOk:
        return 3
    h.run()
    status = h.getModelStatus()
    info = h.getInfo()
    if info.primal_solution_status != 2:  # 2 = feasible
        print(f"no feasible solution: {h.modelStatusToString(status)}", file=sys.stderr)
        return 1
    values = h.getSolution().col_value
    lp = h.getLp()
    with open(sol_path, "w") as out:
        out.write(f"# status {h.modelStatusToString(status)}\n")
        for name, value in zip(lp.col_names_, values):
            out.write(f"{name} {value!r}\n")
    return 0


if __name__ == "__main__":
    sys.exit(main())
