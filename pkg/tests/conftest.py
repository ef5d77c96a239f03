import pytest

from coxwalk import verification


@pytest.fixture(scope="session")
def vctx():
    """Shared fixture diagrams and automata (the rank-5 automaton is the
    expensive one; build it once per session)."""
    return verification.VerificationContext()


@pytest.fixture(scope="session")
def case_vi_automaton(vctx):
    return vctx.automaton_for("case_vi")
