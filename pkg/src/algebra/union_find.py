"""
并查集（路径压缩 + 按秩合并），元素为 0..n-1 的整数
"""
from typing import Dict, List


class UnionFind:
    """Union-Find over dense integer ids."""

    def __init__(self, size: int) -> None:
        self.parent: List[int] = list(range(size))
        self.rank: List[int] = [0] * size

    def find(self, i: int) -> int:
        root = i
        while self.parent[root] != root:
            root = self.parent[root]
        # 路径压缩
        while self.parent[i] != root:
            self.parent[i], i = root, self.parent[i]
        return root

    def union(self, i: int, j: int) -> bool:
        """合并两个类；真正发生合并时返回 True"""
        root_i = self.find(i)
        root_j = self.find(j)

        if root_i == root_j:
            return False

        if self.rank[root_i] < self.rank[root_j]:
            self.parent[root_i] = root_j
        elif self.rank[root_i] > self.rank[root_j]:
            self.parent[root_j] = root_i
        else:
            self.parent[root_j] = root_i
            self.rank[root_i] += 1
        return True

    def connected(self, i: int, j: int) -> bool:
        return self.find(i) == self.find(j)

    def canonical_labels(self) -> List[int]:
        """每个元素映射到所在类的最小成员"""
        least: Dict[int, int] = {}
        labels = []
        for i in range(len(self.parent)):
            root = self.find(i)
            labels.append(least.setdefault(root, i))
        return labels
