import json

from wittcert.cli import main


def run_cli(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, out


def run_json(capsys, *argv):
    code, out = run_cli(capsys, *argv)
    return code, json.loads(out)


class TestBasicVerbs:
    def test_invariants(self, capsys):
        code, out = run_json(capsys, "invariants", '{"diag":[1,1,1,1,1,2]}')
        assert code == 0
        assert out["dim"] == 6 and out["disc"] == -2 and out["signature"] == 6

    def test_isotropic(self, capsys):
        code, out = run_json(capsys, "isotropic", '{"diag":[1,-1]}')
        assert code == 0 and out == {"isotropic": True}

    def test_text_syntax(self, capsys):
        code, out = run_json(capsys, "invariants", "<<2,5>>")
        assert code == 0 and out["dim"] == 4 and out["disc"] == 1

    def test_pfister_expand(self, capsys):
        code, out = run_json(capsys, "pfister-expand", '{"pfister":[2,5]}')
        assert code == 0 and out == {"diag": [1, -2, -5, 10]}

    def test_composed_descriptor(self, capsys):
        payload = '{"tensor":[{"pfister":[2,5]},{"diag":[1,1,1,1,1,2]}]}'
        code, out = run_json(capsys, "invariants", payload)
        assert code == 0 and out["dim"] == 24

    def test_witt_over_tower(self, capsys):
        payload = '{"form":{"diag":[1,1,1,1]},"tower":{"tower":[-1]}}'
        code, out = run_json(capsys, "witt", payload)
        assert code == 0 and out == {"witt_index": 2, "hyperbolic": True}

    def test_isometric(self, capsys):
        code, out = run_json(capsys, "isometric",
                             '{"left":{"diag":[1,7]},"right":{"diag":[2,14]}}')
        assert code == 0 and out["isometric"] is True

    def test_in_g_and_in_in(self, capsys):
        code, out = run_json(capsys, "in-g", '{"form":{"diag":[1,1,1,1]},"c":2}')
        assert code == 0 and out["in_g"] is True
        code, out = run_json(capsys, "in-in", '{"form":{"pfister":[2,3,5,7]},"n":4}')
        assert code == 0 and out["in_in"] is True

    def test_quaternion_and_reduce(self, capsys):
        code, out = run_json(capsys, "quaternion", '{"quaternion":[2,5]}')
        assert code == 0 and out == {"norm_form": [1, -2, -5, 10], "split": False}
        code, out = run_json(capsys, "reduce",
                             '{"inv_algebra":{"phi":{"diag":[1]},"q":[3,7]}}')
        assert code == 0 and out == {"diag": [1, -3, -7, 21]}

    def test_norm_member(self, capsys):
        code, out = run_json(capsys, "norm-member", '{"c":-1,"d":2}')
        assert code == 0 and out == {"member": True}
        code, out = run_json(capsys, "norm-member", '{"c":-1,"tower":[2,3]}')
        assert code == 0 and out == {"member": False}


class TestPipelineVerbs:
    def test_delta(self, capsys):
        code, out = run_json(capsys, "delta",
                             '{"inv_algebra":{"phi":{"diag":[1,1,1,1,1,2]},"q":[2,5]}}')
        assert code == 0
        assert out["degree"] == 12 and out["index"] == 2 and out["trivial"] is True

    def test_lemma_beta(self, capsys):
        code, out = run_json(capsys, "lemma-beta", '{"form":{"diag":[1,1,1,1]},"a":1}')
        assert code == 0 and out == {"d": -1}

    def test_thm4(self, capsys):
        code, out = run_json(capsys, "thm4", '{"phi":{"diag":[1,1,1,1]},"q":[3,5]}')
        assert code == 0
        assert out["slots4"] == [-1, -1, 3, 5] and out["scale4"] == 1

    def test_thm6_worked(self, capsys):
        payload = '{"phi":{"diag":[1,1,1,1,1,2]},"q":[2,5],"multipliers":[1,-2,10]}'
        code, out = run_json(capsys, "thm6", payload)
        assert code == 0
        assert out["hypotheses_passed"] is True
        assert all(m["status"] == "certificate" for m in out["multipliers"])

    def test_thm6_negative_control_exits_2(self, capsys):
        payload = '{"phi":{"diag":[1,1,1,1,1,1]},"q":[-1,-1]}'
        code, out = run_json(capsys, "thm6", payload)
        assert code == 2
        assert out["halted_at"] == "delta-trivial"

    def test_certificate_round_trip(self, capsys):
        payload = ('{"pi":{"pfister":[-1,-1]},"psi":{"diag":[1,1,1,1,1,-3]},"c":2}')
        code, out = run_json(capsys, "lemma24", payload)
        assert code == 0
        cert = out["certificate"]
        assert cert["schema"] == "hyp-certificate/1"
        verify_payload = json.dumps({
            "form": {"tensor": [{"pfister": [-1, -1]}, {"diag": [1, 1, 1, 1, 1, -3]}]},
            "certificate": cert,
        })
        code, out = run_json(capsys, "verify-cert", verify_payload)
        assert code == 0 and out == {"valid": True}

    def test_trace_evidence(self, capsys):
        payload = ('{"pi":{"pfister":[-1,-1]},"psi":{"diag":[1,1,1,1,1,-3]},"c":2}')
        code, out = run_json(capsys, "lemma24", payload, "--trace")
        assert code == 0
        assert out["trace"]
        assert all(e["local_verdict"] == {"aniso_dim": 0, "hyperbolic": True}
                   for e in out["trace"])


class TestCliContract:
    def test_unknown_verb_exit_1(self, capsys):
        assert main(["frobnicate", "{}"]) == 1

    def test_malformed_payload_exit_1(self, capsys):
        code, _ = run_cli(capsys, "isometric", '{"left":{"diag":[1]}}')
        assert code == 1

    def test_unknown_descriptor_exit_1(self, capsys):
        code, out = run_json(capsys, "invariants", '{"gram":[[1,0],[0,1]]}')
        assert code == 1 and out["error"] == "malformed-input"

    def test_witt_reports_aniso_class(self, capsys):
        code, out = run_json(capsys, "witt", '{"diag":[1,1,1,1,-7,-7]}')
        assert code == 0
        assert out["witt_index"] == 2 and out["aniso_dim"] == 2
        assert out["aniso_class"]["signature"] == 2

    def test_precondition_failure_exit_2(self, capsys):
        code, out = run_json(capsys, "lemma-beta", '{"form":{"diag":[1,-1]},"a":1}')
        assert code == 2 and out["error"] == "precondition-failed"

    def test_byte_identical_output(self, capsys):
        payload = '{"phi":{"diag":[1,1,1,1,1,2]},"q":[2,5],"multipliers":[1,-2,10,-5]}'
        _, out1 = run_cli(capsys, "thm6", payload)
        _, out2 = run_cli(capsys, "thm6", payload)
        assert out1 == out2

    def test_no_floats_anywhere(self, capsys):
        payload = '{"phi":{"diag":[1,1,1,1,1,2]},"q":[2,5],"multipliers":[1,-2]}'
        _, out = run_cli(capsys, "thm6", payload)
        def scan(obj):
            if isinstance(obj, float):
                raise AssertionError("float in output")
            if isinstance(obj, dict):
                for v in obj.values():
                    scan(v)
            if isinstance(obj, list):
                for v in obj:
                    scan(v)
        scan(json.loads(out))

    def test_bound_flag_threads_through(self, capsys):
        code, out = run_json(capsys, "lemma-beta",
                             '{"form":{"diag":[1,1,1,1]},"a":1}', "--bound", "50")
        assert code == 0 and out == {"d": -1}
