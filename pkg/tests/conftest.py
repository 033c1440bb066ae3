"""Collects acceptance outcomes and prints one line per criterion at the end of the run."""

_results = {}


def pytest_runtest_logreport(report):
    props = dict(report.user_properties)
    if "criterion" not in props:
        return
    key = props["criterion"]
    failed = report.failed
    prev = _results.get(key)
    if report.when == "call" or failed:
        ok = not failed and (prev is None or prev[0])
        _results[key] = (ok, props.get("detail", "") if ok else report.when + " failed")


def pytest_terminal_summary(terminalreporter):
    if not _results:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(_results, key=lambda k: int(k.split()[0])):
        ok, detail = _results[key]
        line = f"{'PASS' if ok else 'FAIL'}  {key}"
        if detail:
            line += f"  ({detail})"
        terminalreporter.write_line(line)
