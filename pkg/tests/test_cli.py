import json
import logging

import pytest

from tracetensor import cli
from tracetensor.chident.identities import CH
from tracetensor.chident.identities import F_kd
from tracetensor.chident.identities import antisymmetrizer_element
from tracetensor.interp.certificate import DeductionCertificate
from tracetensor.interp.interpretation import InterpContext
from tracetensor.interp.interpretation import interpret_perm
from tracetensor.symgroup.group_algebra import GroupAlgebraElement
from tracetensor.symgroup.permutation import parse_cycles
from tracetensor.twisted.element import TwistedElement
from tracetensor.twisted.element import permutation_element
from tracetensor.twisted.element import tensor_monomial
from tracetensor.twisted.traces import partial_trace
from tracetensor.utils.jsonio import read_json
from tracetensor.utils.jsonio import write_json


def _run(argv, capsys):
    status = cli.main(argv)
    out, err = capsys.readouterr()
    return status, out, err


def test_split_example(capsys):
    status, out, _ = _run(
        ["split", "--m", "8", "--perm", "(1,7,8,4,2,6,3)", "--A", "1,2"], capsys)
    assert status == 0
    assert out == "(2,7,8,4)(1,6,3) | id | (1,2)\n"


def test_split_left(capsys):
    status, out, _ = _run(
        ["split", "--m", "8", "--perm", "(1,7,8,4,2,6,3)", "--A", "1,2", "--left"], capsys)
    assert status == 0
    assert out.count("|") == 2


@pytest.mark.parametrize("k,d", [(0, 1), (1, 2), (2, 2), (2, 3)])
class TestGenerateAndVerify:
    @pytest.fixture(autouse=True)
    def setUp(self, k, d, tmp_path):
        self.k = k
        self.d = d
        self.path = str(tmp_path / "ch.json")

    def test_ch(self, capsys):
        argv = ["ch", "--d", str(self.d), "--k", str(self.k), "-o", self.path]
        assert cli.main(argv) == 0
        assert TwistedElement.from_dict(read_json(self.path)) == CH(self.k, self.d)
        assert cli.main(["verify", "--d", str(self.d), self.path]) == 0
        assert capsys.readouterr().out == "identity\n"

    def test_ch_not_identity_one_size_up(self, capsys):
        if self.d >= 3:
            return
        cli.main(["ch", "--d", str(self.d), "--k", str(self.k), "-o", self.path])
        assert cli.main(["verify", "--d", str(self.d + 1), self.path]) == 1
        assert capsys.readouterr().out == "not an identity\n"

    def test_recursive(self):
        argv = ["ch", "--d", str(self.d), "--k", str(self.k), "--recursive", "-o", self.path]
        assert cli.main(argv) == 0
        assert TwistedElement.from_dict(read_json(self.path)) == CH(self.k, self.d)

    def test_formal_lambda(self):
        argv = ["ch", "--d", str(self.d), "--k", str(self.k), "--formal-lambda",
                "--recursive", "-o", self.path]
        assert cli.main(argv) == 0
        element = TwistedElement.from_dict(read_json(self.path))
        assert element.specialize_lambda(self.d) == CH(self.k, self.d)

    def test_fkd(self):
        argv = ["fkd", "--d", str(self.d), "--k", str(self.k), "-o", self.path]
        assert cli.main(argv) == 0
        assert TwistedElement.from_dict(read_json(self.path)) == F_kd(self.k, self.d)
        assert cli.main(["verify", "--d", str(self.d), "--multilinear", self.path]) == 0


def test_ch_stdout_is_deterministic(capsys):
    _, first, _ = _run(["ch", "--d", "2", "--k", "1"], capsys)
    _, second, _ = _run(["ch", "--d", "2", "--k", "1", "-o", "-", "--json"], capsys)
    assert first == second
    assert "\n" not in first.rstrip("\n")
    assert TwistedElement.from_dict(json.loads(first)) == CH(1, 2)


def test_pretty(capsys):
    _, out, _ = _run(["fkd", "--d", "1", "--k", "1", "--pretty"], capsys)
    assert out.startswith("{\n  ")
    assert TwistedElement.from_dict(json.loads(out)) == F_kd(1, 1)


def test_logging_keeps_stdout_clean(capsys):
    _, out, _ = _run(["--log-level", str(logging.DEBUG), "ch", "--d", "2", "--k", "2",
                      "--recursive"], capsys)
    assert TwistedElement.from_dict(json.loads(out)) == CH(2, 2)


def test_interpret_and_encode(tmp_path, capsys):
    path = str(tmp_path / "interp.json")
    assert cli.main(["interpret", "--n", "2", "--k", "1", "--perm", "(2,1,3)", "-o", path]) == 0
    ctx = InterpContext(2, 1)
    tau = parse_cycles("(2,1,3)", 3)
    element = TwistedElement.from_dict(read_json(path))
    assert element == interpret_perm(tau, ctx)
    assert element == tensor_monomial([(1,), ()]) * permutation_element(parse_cycles("(1,2)", 2))

    status, out, _ = _run(["encode", path], capsys)
    assert status == 0
    g = GroupAlgebraElement.from_dict(json.loads(out))
    assert g == GroupAlgebraElement.from_permutation(tau)


def test_encode_not_multilinear(tmp_path, capsys):
    path = str(tmp_path / "sq.json")
    write_json(tensor_monomial([(1, 1)]).to_dict(), path)
    status, _, err = _run(["encode", path], capsys)
    assert status == 2
    assert err.startswith("tracetensor: error:")


def test_ptrace(tmp_path):
    src = str(tmp_path / "a3.json")
    dst = str(tmp_path / "t.json")
    a = antisymmetrizer_element(3)
    write_json(a.to_dict(), src)
    assert cli.main(["ptrace", src, "-o", dst]) == 0
    assert TwistedElement.from_dict(read_json(dst)) == partial_trace(a)
    assert cli.main(["ptrace", src, "--specialize", "2", "-o", dst]) == 0
    assert TwistedElement.from_dict(read_json(dst)) == partial_trace(a).specialize_lambda(2)


class TestReduceAndCheck:
    @pytest.fixture(autouse=True)
    def setUp(self, tmp_path):
        self.cert = str(tmp_path / "cert.json")

    def test_valid(self, capsys):
        argv = ["reduce", "--d", "1", "--m", "4", "--perm", "(1,3)", "--C", "1,2",
                "-o", self.cert]
        assert cli.main(argv) == 0
        status, out, _ = _run(["check-cert", self.cert], capsys)
        assert status == 0
        assert out == "valid\n"

    def test_explicit_arity(self, capsys):
        argv = ["reduce", "--d", "2", "--m", "5", "--n", "1", "--perm", "(1,4,2)",
                "--C", "2,3,5", "-o", self.cert]
        assert cli.main(argv) == 0
        assert DeductionCertificate.from_dict(read_json(self.cert)).target.n == 1
        assert _run(["check-cert", self.cert], capsys)[0] == 0

    def test_tampered(self, capsys):
        argv = ["reduce", "--d", "1", "--m", "4", "--perm", "(1,3)", "--C", "1,2",
                "-o", self.cert]
        cli.main(argv)
        data = read_json(self.cert)
        target = TwistedElement.from_dict(data["target"])
        data["target"] = target.scale(2).to_dict()
        write_json(data, self.cert)
        status, out, _ = _run(["check-cert", self.cert], capsys)
        assert status == 1
        assert out == "invalid\n"

    def test_bad_arity(self, capsys):
        argv = ["reduce", "--d", "1", "--m", "4", "--n", "6", "--perm", "(1,3)",
                "--C", "1,2"]
        status, _, err = _run(argv, capsys)
        assert status == 2
        assert "--n" in err

    def test_bad_C(self, capsys):
        argv = ["reduce", "--d", "2", "--m", "4", "--perm", "(1,3)", "--C", "1,2"]
        status, _, err = _run(argv, capsys)
        assert status == 2
        assert "C must have" in err


@pytest.mark.parametrize(
    "argv",
    [
        ["ch", "--d", "1", "--k", "5"],
        ["fkd", "--d", "-1", "--k", "0"],
        ["interpret", "--n", "2", "--k", "1", "--perm", "(1,4)"],
        ["split", "--m", "3", "--perm", "(1,2", "--A", "1"],
        ["split", "--m", "3", "--perm", "(1,2)", "--A", "x"],
        ["verify", "--d", "2", "/nonexistent/element.json"],
        ["check-cert", "/nonexistent/cert.json"],
    ],
)
def test_errors(argv, capsys):
    status, out, err = _run(argv, capsys)
    assert status == 2
    assert out == ""
    assert err.startswith("tracetensor: error:")


def test_malformed_json(tmp_path, capsys):
    path = tmp_path / "bad.json"
    path.write_text("{not json")
    assert _run(["verify", "--d", "2", str(path)], capsys)[0] == 2
    path.write_text('{"terms": []}')
    assert _run(["ptrace", str(path)], capsys)[0] == 2
    path.write_text('{"base": {"k": 0}}')
    assert _run(["check-cert", str(path)], capsys)[0] == 2


def test_usage_error():
    with pytest.raises(SystemExit) as excinfo:
        cli.main(["ch", "--d", "2"])
    assert excinfo.value.code == 2
    with pytest.raises(SystemExit):
        cli.main([])
