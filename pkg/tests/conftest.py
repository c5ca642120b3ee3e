import pytest

from adlv.affine import affine_context
from adlv.roots import build_root_datum


@pytest.fixture(scope="session")
def a2():
    return build_root_datum("A", 2, "SL")


@pytest.fixture(scope="session")
def a2_ctx(a2):
    return affine_context(a2)


@pytest.fixture(scope="session")
def c2():
    return build_root_datum("C", 2, "adjoint")


@pytest.fixture(scope="session")
def c2_ctx(c2):
    return affine_context(c2)


@pytest.fixture(scope="session")
def gl2():
    return build_root_datum("GL", 2)


@pytest.fixture(scope="session")
def gl2_ctx(gl2):
    return affine_context(gl2)


@pytest.fixture(scope="session")
def gl3():
    return build_root_datum("GL", 3)


@pytest.fixture(scope="session")
def gl3_ctx(gl3):
    return affine_context(gl3)


def ball_with_omega(ctx, max_len):
    """All extended elements of length <= max_len, sorted deterministically."""
    from adlv.engine import affine_ball
    ball = affine_ball(ctx, max_len)
    try:
        om = list(ctx.omega_g_elements().values())
    except ValueError:
        om = [ctx.identity]
    xs = {ctx.mul(u, t) for u in ball for t in om}
    return sorted(xs, key=lambda z: (ctx.length(z), ctx.format(z)))
