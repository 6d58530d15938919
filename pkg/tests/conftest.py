import sys

import numpy as np
import pytest


class ScriptedStream:
    """Stand-in for RandomStream that replays fixed raw draws.

    ``normal`` and ``cauchy`` return ``loc + scale * z`` where ``z`` is the
    next scripted standard draw, mirroring the real stream.
    """

    def __init__(self, uniforms=(), normals=(), cauchys=()):
        self.uniforms = list(uniforms)
        self.normals = list(normals)
        self.cauchys = list(cauchys)

    def random(self):
        return self.uniforms.pop(0)

    def random_vector(self, size):
        out = np.array(self.uniforms[:size], dtype=float)
        del self.uniforms[:size]
        return out

    def index(self, n):
        return min(int(self.random() * n), n - 1)

    def normal(self, mean=0.0, sd=1.0):
        return mean + sd * self.normals.pop(0)

    def cauchy(self, location=0.0, scale=1.0):
        return location + scale * self.cauchys.pop(0)


@pytest.fixture
def scripted():
    return ScriptedStream


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance") or sys.modules.get("tests.test_acceptance")
    lines = getattr(mod, "LINES", None)
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)
