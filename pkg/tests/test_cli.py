import io
import json
import random
import subprocess
import sys

import pytest

from ordinals import cli, cnf
from gen import random_cnf
from oracles import ol_cmp, ol_random, ol_text


def run(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = cli.main(list(argv), out, err)
    return code, out.getvalue(), err.getvalue()


@pytest.fixture
def orders(tmp_path):
    def write(name, doc):
        p = tmp_path / name
        p.write_text(json.dumps(doc))
        return str(p)

    return {
        "anti": write("two_antichain.json", {"size": 2, "lt": []}),
        "c1": write("c1.json", {"size": 1, "lt": []}),
        "c2": write("c2.json", {"size": 2, "lt": [[0, 1]]}),
        "c3": write("c3.json", {"size": 3, "lt": [[0, 1], [0, 2], [1, 2]]}),
        "bad": write("bad.json", {"size": 2, "lt": [[0, 5]]}),
        "junk": write("junk.json", "not an order"),
    }


def test_eval_and_unicode():
    assert run("eval", "w*2 + 3") == (0, "w^1*2 + 3\n", "")
    assert run("eval", "1 + w")[1] == "w^1\n"
    assert run("eval", "--unicode", "w^w")[1] == "ω^ω^1\n"


def test_cmp_exit_codes():
    assert run("cmp", "w+1", "1+w")[:2] == (2, ">\n")
    assert run("cmp", "1+w", "w")[:2] == (1, "=\n")
    assert run("cmp", "3", "w")[:2] == (0, "<\n")


def test_classify():
    assert run("classify", "0")[1] == "zero\n"
    assert run("classify", "w+3")[1] == "successor of w^1 + 2\n"
    code, out, _ = run("classify", "w^w", "--fund", "2")
    assert code == 0 and out.splitlines() == ["limit", "f(0) = 1", "f(1) = w^1", "f(2) = w^2"]
    code, out, err = run("classify", "5", "--fund", "1")
    assert code == cli.EX_DATAERR and out == "" and "not a limit" in err


def test_brouwer_commands():
    assert run("brw-cmp", "3", "w", "--fuel", "5", "--strip-cert")[1] == "true\n"
    assert run("brw-cmp", "w", "w", "--fuel", "5", "--strip-cert")[1] == "unknown\n"
    assert run("brw-cmp", "w", "w", "--fuel", "0")[1] == "true\n"
    assert run("brw-cmp", "w", "3", "--fuel", "5", "--strip-cert")[1] == "false\n"
    assert run("brw-cmp", "w", "w", "--fuel", "3", "--strict")[1] == "false\n"
    assert run("brw-bisim", "w", "w*2", "--depth", "2", "--width", "4")[1] == "refuted\n"
    assert run("brw-bisim", "w", "1+w", "--depth", "2", "--width", "4")[1] == "consistent\n"


def test_ewo_check(orders):
    code, out, _ = run("ewo", "check", orders["anti"])
    assert code == 1
    assert out.splitlines()[0] == "invalid"
    assert "extensional: no (0 and 1 have the same predecessors)" in out
    assert run("ewo", "check", orders["c3"])[0] == 0


def test_ewo_sim(orders):
    code, out, _ = run("ewo", "sim", orders["c2"], orders["c3"])
    assert code == 0 and out == "simulation 0->0 1->1\nbounded by 2\n"
    assert run("ewo", "sim", orders["c3"], orders["c2"])[:2] == (1, "no simulation\n")
    code, _, err = run("ewo", "sim", orders["anti"], orders["c2"])
    assert code == cli.EX_DATAERR and "not a valid order" in err


def test_ewo_op_and_limit(orders):
    code, out, _ = run("ewo", "op", "sum", orders["c1"], orders["c2"])
    doc = json.loads(out)
    assert code == 0 and doc["size"] == 3
    assert json.loads(run("ewo", "op", "prod", orders["c2"], orders["c3"])[1])["size"] == 6
    assert json.loads(run("ewo", "op", "succ", orders["c2"])[1])["size"] == 3
    assert run("ewo", "op", "succ", orders["c2"], orders["c2"])[0] == cli.EX_USAGE
    assert json.loads(run("ewo", "limit", orders["c1"], orders["c2"], orders["c3"])[1])["size"] == 3
    assert run("ewo", "limit", orders["c3"], orders["c2"])[0] == cli.EX_DATAERR


def test_input_errors(orders):
    code, out, err = run("eval", "w^")
    assert code == cli.EX_DATAERR and out == "" and "offset 2" in err
    assert run("eval", "2^w")[0] == cli.EX_DATAERR
    assert run("ewo", "check", orders["bad"])[0] == cli.EX_DATAERR
    assert run("ewo", "check", orders["junk"])[0] == cli.EX_DATAERR
    assert run("ewo", "check", orders["c1"] + ".missing")[0] == cli.EX_NOINPUT


def test_usage_errors(capsys):
    for argv in [[], ["bogus"], ["cmp", "1"], ["brw-cmp", "1", "2"],
                 ["brw-cmp", "1", "2", "--fuel", "-1"], ["axioms", "--instance", "zfc",
                                                         "--samples", "3", "--seed", "1"],
                 ["axioms", "--instance", "cnf", "--samples", "0", "--seed", "1"]]:
        assert run(*argv)[0] == cli.EX_USAGE, argv
    capsys.readouterr()


def test_axioms_command():
    code, out, _ = run("axioms", "--instance", "cnf", "--samples", "30", "--seed", "4")
    assert code == 0 and out.startswith("instance cnf  seed 4")
    code, out, _ = run("axioms", "--instance", "ewo", "--samples", "20", "--seed", "4", "--json")
    doc = json.loads(out)
    assert code == 0 and doc["instance"] == "ewo"
    assert {r["outcome"] for r in doc["results"]} <= {"pass", "skipped"}


def test_output_is_deterministic():
    a = run("axioms", "--instance", "brw", "--samples", "20", "--seed", "8", "--json")
    b = run("axioms", "--instance", "brw", "--samples", "20", "--seed", "8", "--json")
    assert a == b


def test_cmp_agrees_with_oracle():
    rng = random.Random(5)
    signs = {-1: "<\n", 0: "=\n", 1: ">\n"}
    for _ in range(300):
        a, b = ol_random(rng), ol_random(rng)
        assert run("cmp", ol_text(a), ol_text(b))[1] == signs[ol_cmp(a, b)]


def test_eval_round_trips_canonical_forms():
    rng = random.Random(6)
    for _ in range(200):
        a = random_cnf(rng)
        text = cnf.to_text(a)
        assert run("eval", text)[1] == text + "\n"


# -- end to end, through a real process ---------------------------------------------

E2E = [
    (["eval", "w^w + w*2 + 3"], 0, "w^w^1 + w^1*2 + 3\n"),
    (["cmp", "w+1", "1+w"], 2, ">\n"),
    (["cmp", "w", "1+w"], 1, "=\n"),
    (["cmp", "1", "w"], 0, "<\n"),
    (["classify", "w^w", "--fund", "2"], 0, "limit\nf(0) = 1\nf(1) = w^1\nf(2) = w^2\n"),
    (["eval", "w^"], 65, ""),
    (["eval"], 64, ""),
    (["frobnicate"], 64, ""),
]


@pytest.mark.parametrize("argv, code, stdout", E2E)
def test_end_to_end_exit_codes(argv, code, stdout):
    p = subprocess.run([sys.executable, "-m", "ordinals", *argv], capture_output=True, text=True)
    assert p.returncode == code
    assert p.stdout == stdout
    if code >= 64:
        assert p.stderr
