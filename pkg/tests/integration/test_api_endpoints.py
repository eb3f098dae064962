"""
集成测试 - API接口测试
"""
import json

import pytest
from httpx import AsyncClient, ASGITransport
import sys
import os

project_root = os.path.dirname(os.path.dirname(os.path.dirname(os.path.abspath(__file__))))
sys.path.insert(0, project_root)

from src.main import app


def _corpus(filename):
    with open(os.path.join(project_root, "data", "corpus", filename), encoding="utf-8") as f:
        return json.load(f)


def _client():
    return AsyncClient(transport=ASGITransport(app=app), base_url="http://test")


class TestAPIEndpoints:
    """API接口集成测试"""

    @pytest.mark.asyncio
    async def test_root_endpoint(self):
        """测试根路径接口"""
        async with _client() as client:
            response = await client.get("/")

            assert response.status_code == 200
            data = response.json()
            assert "service" in data
            assert "version" in data
            assert data["status"] == "running"

    @pytest.mark.asyncio
    async def test_health_check_endpoint(self):
        """测试健康检查接口"""
        async with _client() as client:
            response = await client.get("/api/v1/health/")

            assert response.status_code == 200
            data = response.json()
            assert data["status"] == "healthy"
            assert "algebra_service" in data["components"]

    @pytest.mark.asyncio
    async def test_liveness_endpoint(self):
        """测试存活检查接口"""
        async with _client() as client:
            response = await client.get("/api/v1/health/live")
            assert response.json() == {"status": "alive"}

    @pytest.mark.asyncio
    async def test_inspect_endpoint(self):
        """测试半群概要接口"""
        async with _client() as client:
            response = await client.post("/api/v1/semigroups/inspect", json=_corpus("b2.json"))

            assert response.status_code == 200
            data = response.json()
            assert data["order"] == 5
            assert data["idempotent_count"] == 3
            assert data["is_clifford"] is False
            assert data["character_count"] == 3
            assert data["fixed_character_count"] == 1
            assert data["hom_to_two_count"] == 1
            assert "X-Request-ID" in response.headers

    @pytest.mark.asyncio
    async def test_inspect_presented(self):
        """测试范式表示语料的概要"""
        async with _client() as client:
            response = await client.post("/api/v1/semigroups/inspect", json=_corpus("fcis_xy.json"))

            assert response.status_code == 200
            data = response.json()
            assert data["order"] is None
            assert data["character_count"] == 3
            assert data["hom_to_two_count"] == 3

    @pytest.mark.asyncio
    async def test_congruence_endpoint(self):
        """测试同余接口"""
        async with _client() as client:
            payload = {"corpus": _corpus("s3.json"), "which": "least-abelian", "emit_quotient": True}
            response = await client.post("/api/v1/semigroups/congruence", json=payload)

            assert response.status_code == 200
            data = response.json()
            assert len(data["classes"]) == 2
            assert data["quotient_order"] == 2
            assert data["quotient_is_commutative"] is True
            assert len(data["quotient"]["table"]) == 2

    @pytest.mark.asyncio
    async def test_unknown_congruence(self):
        """测试未知的同余种类"""
        async with _client() as client:
            payload = {"corpus": _corpus("z4.json"), "which": "from-pairs:mod3"}
            response = await client.post("/api/v1/semigroups/congruence", json=payload)

            assert response.status_code == 400
            assert response.json()["error_code"] == "UNKNOWN_CONGRUENCE"

    @pytest.mark.asyncio
    async def test_verify_endpoint(self):
        """测试定理校验接口"""
        async with _client() as client:
            payload = {"corpus": _corpus("b2.json"), "theorems": ["clifford", "fixed-points"]}
            response = await client.post("/api/v1/semigroups/verify", json=payload)

            assert response.status_code == 200
            data = response.json()
            assert data["all_verified"] is True
            assert [r["theorem"] for r in data["reports"]] == ["clifford", "fixed-points"]
            assert all(r["certificate"] is not None for r in data["reports"])

    @pytest.mark.asyncio
    async def test_bad_table(self):
        """测试不满足结合律的乘法表"""
        async with _client() as client:
            payload = {"name": "bad", "kind": "table", "table": [[1, 0], [0, 0]]}
            response = await client.post("/api/v1/semigroups/inspect", json=payload)

            assert response.status_code == 400
            data = response.json()
            assert data["success"] is False
            assert data["error_code"] == "NON_ASSOCIATIVE"

    @pytest.mark.asyncio
    async def test_invalid_request(self):
        """测试请求体校验失败"""
        async with _client() as client:
            response = await client.post("/api/v1/semigroups/inspect", json={"name": "x"})
            assert response.status_code == 422


if __name__ == "__main__":
    pytest.main([__file__, "-v"])
