import pytest

_CRITERIA: dict[str, str] = {}


@pytest.fixture
def criterion(request):
    """Record one acceptance line: call with the criterion label and detail."""
    state = {}

    def record(label, detail=""):
        state["label"] = label
        state["detail"] = detail

    yield record
    if "label" in state:
        rep = getattr(request.node, "rep_call", None)
        status = "PASS" if rep is not None and rep.passed else "FAIL"
        if state["label"].endswith("(probe)"):
            status = "INFO" if status == "PASS" else status
        _CRITERIA[state["label"]] = f"{status}  {state['label']}  {state['detail']}".rstrip()


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    setattr(item, "rep_" + rep.when, rep)


def pytest_terminal_summary(terminalreporter):
    if _CRITERIA:
        terminalreporter.section("acceptance criteria")
        for key in sorted(_CRITERIA):
            terminalreporter.write_line(_CRITERIA[key])
