from hypothesis import HealthCheck, settings

settings.register_profile(
    "default",
    deadline=None,
    max_examples=40,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("default")


# one pass/fail line per acceptance criterion, printed after the run

_criteria: dict = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, title): acceptance criterion a test belongs to")


def pytest_runtest_logreport(report):
    props = dict(report.user_properties)
    if "criterion" not in props:
        return
    if report.when != "call" and report.passed:
        return
    entry = _criteria.setdefault(props["criterion"], {"title": props["title"], "ok": True, "details": []})
    if report.failed:
        entry["ok"] = False
    if report.when == "call" and props.get("detail"):
        entry["details"].append(props["detail"])


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for num in sorted(_criteria):
        e = _criteria[num]
        line = f"criterion {num:2d}: {'PASS' if e['ok'] else 'FAIL'}  {e['title']}"
        terminalreporter.write_line(line)
        for d in e["details"]:
            terminalreporter.write_line(f"              {d}")
