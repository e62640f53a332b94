"""Validate CLI JSON output against docs/result.schema.json.

usage: check_schema.py <cltb binary> <schema>
"""
import json
import os
import subprocess
import sys

import jsonschema

RUNS = [
    ["bound", "--op", "poisson_sum", "--lambda", "100", "--a", "0", "--beta2", "1", "--beta", "1"],
    ["bound", "--op", "poisson_sum", "--lambda", "100", "--a", "0", "--beta2", "1", "--beta", "1",
     "--expect", "0.03031", "--tolerance", "1e-6"],
    ["bound", "--op", "prawitz", "--dist", '{"family":"binomial","n":1,"p":0.3}', "--n", "9"],
    ["bound", "--op", "extremal_two_point", "--rho", "2"],
    ["bound", "--op", "poisson_sum_lower", "--delta", "1"],
    ["bound", "--op", "nb_index_moments", "--r", "2", "--p", "0.5", "--delta", "1"],
    ["bound", "--op", "psi", "--p", "0.3"],
    ["oracle", "--metric", "zeta1", "--dist", '{"family":"poisson","lambda":3}'],
    ["oracle", "--metric", "tv", "--dist", '{"family":"binomial","n":4,"p":0.2}',
     "--against", '{"family":"poisson","lambda":0.8}'],
    ["decompose", "--dist", '{"family":"negative_binomial","r":2,"p":0.4}'],
    ["table", "--id", "t2_4"],
    ["table", "--id", "t3_gamma"],
    ["verify", "--suite", "all", "--seed", "3"],
]


def main():
    cli, schema_path = sys.argv[1], sys.argv[2]
    with open(schema_path) as f:
        schema = json.load(f)
    jsonschema.Draft202012Validator.check_schema(schema)
    validator = jsonschema.Draft202012Validator(schema)
    bad = 0
    # the request schema sits next to the result schema
    with open(os.path.join(os.path.dirname(schema_path), "spec.schema.json")) as f:
        spec_schema = json.load(f)
    jsonschema.Draft202012Validator.check_schema(spec_schema)
    spec_validator = jsonschema.Draft202012Validator(spec_schema)
    for args in RUNS:
        for flag, text in zip(args, args[1:]):
            if flag in ("--dist", "--against"):
                spec_validator.validate({flag[2:]: json.loads(text)})
        out = subprocess.run([cli] + args, capture_output=True, text=True)
        shown = " ".join(args)
        if out.returncode not in (0, 1):
            print(f"exit {out.returncode}: {shown}\n{out.stderr}")
            bad += 1
            continue
        errors = list(validator.iter_errors(json.loads(out.stdout)))
        for e in errors[:3]:
            print(f"{shown}: {'/'.join(map(str, e.absolute_path))}: {e.message}")
        bad += bool(errors)
        print(("ok   " if not errors else "FAIL ") + shown)
    return 1 if bad else 0


if __name__ == "__main__":
    sys.exit(main())
