#!/usr/bin/env python3
# Copyright 2026 The brp-toolkit Authors.
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Solves an LP file written by `brp emit` with scipy's MILP solver.

Usage: brp_milp_adapter.py MODEL.lp SOLUTION.sol [TIME_LIMIT_SECONDS]

Example:
  export BRP_MIP_COMMAND='python3 tools/brp_milp_adapter.py {lp} {sol} {time}'
"""

import re
import sys

import numpy as np
from scipy.optimize import Bounds, LinearConstraint, milp
from scipy.sparse import coo_matrix

TERM = re.compile(r"([+-]?)\s*(\d+(?:\.\d*)?(?:[eE][+-]?\d+)?)?\s*([A-Za-z_][\w.]*)")


def parse_expr(text):
    terms = []
    for sign, coef, name in TERM.findall(text):
        value = float(coef) if coef else 1.0
        terms.append((name, -value if sign == "-" else value))
    return terms


def parse_lp(path):
    with open(path, encoding="utf-8") as f:
        raw = f.read().splitlines()
    lines = []
    for line in raw:
        if line.startswith("\\"):
            continue
        if line.startswith("   ") and lines:
            lines[-1] += " " + line.strip()
        else:
            lines.append(line.strip())

    section = None
    objective, rows, bounds, binaries = [], [], {}, []
    for line in lines:
        key = line.lower()
        if key in ("minimize", "subject to", "bounds", "binaries", "generals", "end"):
            section = key
            continue
        if not line:
            continue
        if section == "minimize":
            objective += parse_expr(line.split(":", 1)[1])
        elif section == "subject to":
            name, body = line.split(":", 1)
            m = re.match(r"(.*?)(<=|>=|=)\s*(\S+)\s*$", body)
            rows.append((name.strip(), parse_expr(m.group(1)), m.group(2), float(m.group(3))))
        elif section == "bounds":
            lo, name, hi = re.match(r"(\S+)\s*<=\s*(\S+)\s*<=\s*(\S+)", line).groups()
            bounds[name] = (float(lo), float(hi.replace("+inf", "inf")))
        elif section == "binaries":
            binaries += line.split()
    return objective, rows, bounds, binaries


def main(argv):
    if len(argv) < 3:
        sys.stderr.write(__doc__)
        return 2
    lp_path, sol_path = argv[1], argv[2]
    time_limit = float(argv[3]) if len(argv) > 3 else None
    objective, rows, bounds, binaries = parse_lp(lp_path)

    names = list(dict.fromkeys(binaries + list(bounds)))
    for _, terms, _, _ in rows:
        names += [n for n, _ in terms if n not in names]
    index = {n: k for k, n in enumerate(names)}
    n = len(names)

    c = np.zeros(n)
    for name, coef in objective:
        c[index[name]] += coef
    lower = np.zeros(n)
    upper = np.ones(n)
    integrality = np.zeros(n)
    for name in binaries:
        integrality[index[name]] = 1
    for name, (lo, hi) in bounds.items():
        lower[index[name]], upper[index[name]] = lo, hi

    constraints = []
    if rows:
        r, col, val, lo, hi = [], [], [], [], []
        for k, (_, terms, sense, rhs) in enumerate(rows):
            for name, coef in terms:
                r.append(k)
                col.append(index[name])
                val.append(coef)
            lo.append(-np.inf if sense == "<=" else rhs)
            hi.append(np.inf if sense == ">=" else rhs)
        a = coo_matrix((val, (r, col)), shape=(len(rows), n)).tocsr()
        constraints.append(LinearConstraint(a, lo, hi))

    options = {"time_limit": time_limit} if time_limit else {}
    if n == 0:
        with open(sol_path, "w", encoding="utf-8") as f:
            f.write("status optimal\nobjective 0\n")
        return 0
    res = milp(c, constraints=constraints, integrality=integrality,
               bounds=Bounds(lower, upper), options=options)

    with open(sol_path, "w", encoding="utf-8") as f:
        if res.x is None:
            f.write("status %s\n" % ("infeasible" if res.status == 2 else "budget"))
            return 0
        f.write("status %s\n" % ("optimal" if res.status == 0 else "feasible"))
        f.write("objective %.12g\n" % res.fun)
        for name, value in zip(names, res.x):
            if integrality[index[name]]:
                value = round(value)
            f.write("%s %.12g\n" % (name, value))
    return 0


if __name__ == "__main__":
    sys.exit(main(sys.argv))
