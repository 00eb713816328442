from hypothesis import settings

settings.register_profile("default", deadline=None, derandomize=True)
settings.load_profile("default")


def pytest_terminal_summary(terminalreporter):
    from .test_acceptance import RESULTS, summary_lines

    lines = summary_lines(RESULTS)
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)
