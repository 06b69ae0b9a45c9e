"""HTTP service contract tests."""

from __future__ import annotations

import pytest
from fastapi.testclient import TestClient

from goldinterp import PHI, __version__
from goldinterp.service import create_app

B_NODES = [[2, 1], [9, 3], [11, 4], [19, 6], [21, 2], [24, 5]]
D_NODES = [[2, 3], [14, 16], [19, 19]]
E_NODES = [[0, 20], [4, 22], [20, 20], [35, 20]]


@pytest.fixture(scope="module")
def client():
    return TestClient(create_app())


class TestHealth:
    def test_ok(self, client):
        r = client.get("/v1/health")
        assert r.status_code == 200
        assert r.json() == {"status": "ok", "version": __version__}

    def test_idempotent(self, client):
        assert client.get("/v1/health").content == client.get("/v1/health").content


class TestInterpolate:
    def test_b_nodes_equal_number_step(self, client):
        r = client.post(
            "/v1/interpolate",
            json={"method": "golden_eq_step", "nodes": B_NODES, "params": {"side": "left"}},
        )
        assert r.status_code == 200
        doc = r.json()
        assert doc["method"] == "golden_eq_step"
        assert doc["params"] == {"side": "left"}
        assert doc["transformed_nodes"][1][0] == pytest.approx(5.43770, abs=1e-4)
        assert doc["provenance"][1] == "moved"
        assert len(doc["error_reports"]) == 10
        assert len(doc["samples"]) >= 200

    def test_single_node_rejected(self, client):
        r = client.post("/v1/interpolate", json={"method": "step", "nodes": [[0, 0]]})
        assert r.status_code == 400
        assert r.json()["error"] == "INVALID_NODES"

    def test_d_nodes_curve_has_two_hilltops(self, client):
        r = client.post(
            "/v1/interpolate",
            json={
                "method": "golden_ext_curve",
                "nodes": D_NODES,
                "k0": 3.5,
                "params": {"side": "right"},
            },
        )
        assert r.status_code == 200
        doc = r.json()
        assert len(doc["hilltops"]) == 2
        assert doc["accepted"] == [True, True]
        assert doc["hilltops"][0][0] == pytest.approx(6.6287849685834597, abs=1e-9)

    def test_missing_k0(self, client):
        r = client.post("/v1/interpolate", json={"method": "quadratic", "nodes": D_NODES})
        assert r.status_code == 400
        assert r.json()["error"] == "MISSING_DERIVATIVE"

    def test_unknown_method_422(self, client):
        r = client.post("/v1/interpolate", json={"method": "bogus", "nodes": D_NODES})
        assert r.status_code == 422

    def test_unknown_param_422(self, client):
        r = client.post(
            "/v1/interpolate",
            json={"method": "step", "nodes": B_NODES, "params": {"zoom": 2}},
        )
        assert r.status_code == 422

    def test_invalid_param_rejected(self, client):
        r = client.post(
            "/v1/interpolate",
            json={"method": "golden_ext_linear", "nodes": B_NODES, "params": {"q": 0.9}},
        )
        assert r.status_code == 400
        assert r.json()["error"] == "INVALID_PARAM"

    def test_concurrent_identical_requests_agree(self, client):
        from concurrent.futures import ThreadPoolExecutor

        body = {"method": "golden_ext_curve", "nodes": D_NODES, "k0": 3.5}
        with ThreadPoolExecutor(max_workers=8) as pool:
            contents = list(
                pool.map(lambda _: client.post("/v1/interpolate", json=body).content, range(16))
            )
        assert all(c == contents[0] for c in contents)

    def test_determinism_byte_identical(self, client):
        body = {
            "method": "golden_ext_linear",
            "nodes": B_NODES,
            "params": {"q": 0.2, "side": "right"},
            "sample_count": 123,
        }
        a = client.post("/v1/interpolate", json=body)
        b = client.post("/v1/interpolate", json=body)
        assert a.content == b.content

    def test_m_query_parameter(self, client):
        r2 = client.post("/v1/interpolate?m=3", json={"method": "step", "nodes": B_NODES})
        assert r2.status_code == 200
        assert all(rep["m"] == 3 for rep in r2.json()["error_reports"])

    def test_error_reports_cover_variants_and_averaging(self, client):
        r = client.post("/v1/interpolate", json={"method": "step", "nodes": B_NODES})
        reports = r.json()["error_reports"]
        combos = {(rep["variant"], rep["averaged"]) for rep in reports}
        assert len(combos) == 10

    def test_sample_count_validated(self, client):
        r = client.post(
            "/v1/interpolate",
            json={"method": "step", "nodes": B_NODES, "sample_count": 1},
        )
        assert r.status_code == 400
        assert r.json()["error"] == "INVALID_PARAM"


class TestExportEndpoints:
    def _interp(self, client, **extra):
        body = {"method": "golden_ext_curve", "nodes": D_NODES, "k0": 3.5}
        body.update(extra)
        return client.post("/v1/interpolate", json=body).json()

    def test_obj_from_interp_response(self, client):
        doc = self._interp(client)
        doc["axis"] = [16, -17, -66]
        doc["segments"] = 16
        r = client.post("/v1/export/obj", json=doc)
        assert r.status_code == 200
        assert r.text.startswith("v ")
        assert r.headers["content-type"].startswith("model/obj")

    def test_csv_roundtrip(self, client):
        doc = self._interp(client, sample_count=40)
        r = client.post("/v1/export/csv", json=doc)
        assert r.status_code == 200
        assert r.text.splitlines()[0] == "x,y"
        assert r.headers["content-type"].startswith("text/csv")

    def test_svg_with_mirror_is_symmetric(self, client):
        import re

        body = {
            "method": "golden_ext_curve",
            "nodes": E_NODES,
            "k0": 0,
            "params": {"side": "left"},
        }
        doc = client.post("/v1/interpolate", json=body).json()
        xs = [s[0] for s in doc["samples"]]
        assert min(xs) == 0.0 and max(xs) == 35.0  # pre-mirror profile
        plain = client.post("/v1/export/svg", json=doc)
        doc["mirror_about"] = 0.0
        mirrored = client.post("/v1/export/svg", json=doc)
        assert mirrored.status_code == 200
        assert mirrored.headers["content-type"].startswith("image/svg+xml")

        def size(svg):
            return (
                float(re.search(r'width="([0-9.]+)"', svg).group(1)),
                float(re.search(r'height="([0-9.]+)"', svg).group(1)),
            )

        w0, h0 = size(plain.text)
        w1, h1 = size(mirrored.text)
        # The outline spans [-35, 35] after mirroring: twice the data width
        # at the same data height (isotropic scale shrinks to fit).
        assert w1 / h1 == pytest.approx(2.0 * (w0 / h0), rel=0.01)

    def test_malformed_axis_400(self, client):
        doc = self._interp(client)
        doc["axis"] = [0, 0, 5]
        r = client.post("/v1/export/obj", json=doc)
        assert r.status_code == 400
        assert r.json()["error"] == "INVALID_PARAM"

    def test_axis_cross_400(self, client):
        doc = self._interp(client)
        doc["axis"] = [0, 1, -10]  # y = 10 passes through the vase profile
        r = client.post("/v1/export/obj", json=doc)
        assert r.status_code == 400
        assert r.json()["error"] == "AXIS_CROSS"

    def test_overlap_400(self, client):
        doc = self._interp(client)
        doc["mirror_about"] = 10.0
        r = client.post("/v1/export/svg", json=doc)
        assert r.status_code == 400
        assert r.json()["error"] == "OVERLAP"

    def test_missing_axis_422(self, client):
        doc = self._interp(client)
        r = client.post("/v1/export/obj", json=doc)
        assert r.status_code == 422

    def test_body_size_limit(self, client):
        r = client.post(
            "/v1/interpolate",
            content=b"x" * 100,
            headers={"content-length": str(2 << 20), "content-type": "application/json"},
        )
        assert r.status_code == 413
