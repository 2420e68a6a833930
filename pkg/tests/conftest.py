import random

import pytest

ACCEPTANCE_LINES = []

ALPHABET_SIZES = (2, 4, 19, 63, 117, 256)


def random_case(rng: random.Random, max_n=4096, max_m=128):
    """A (pattern, text, alphabet) triple over a random byte alphabet with skewed symbol odds."""
    sigma = rng.choice(ALPHABET_SIZES)
    alphabet = rng.sample(range(256), sigma)
    if sigma > 2 and 0x20 not in alphabet and rng.random() < 0.5:
        alphabet[0] = 0x20
    weights = [1.0 / (k + 1) ** rng.choice((0.0, 1.0)) for k in range(sigma)]
    n = rng.randint(0, max_n)
    m = rng.randint(1, max_m)
    text = bytes(rng.choices(alphabet, weights, k=n))
    if m <= n and rng.random() < 0.6:
        start = rng.randint(0, n - m)
        pattern = text[start:start + m]
    else:
        pattern = bytes(rng.choices(alphabet, weights, k=m))
    return pattern, text, sigma


@pytest.fixture
def acceptance_detail(request):
    def note(text):
        request.node.user_properties.append(("detail", text))
    return note


def pytest_runtest_logreport(report):
    if report.when != "call" and not (report.when == "setup" and report.outcome != "passed"):
        return
    keywords = report.keywords
    if "acceptance" not in keywords:
        return
    detail = "; ".join(v for k, v in report.user_properties if k == "detail")
    ACCEPTANCE_LINES.append((report.nodeid, report.outcome, detail))


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_LINES:
        return
    terminalreporter.section("acceptance criteria")
    for nodeid, outcome, detail in ACCEPTANCE_LINES:
        name = nodeid.split("::")[-1]
        verdict = "PASS" if outcome == "passed" else "FAIL"
        terminalreporter.write_line(f"{verdict}  {name}" + (f"  ({detail})" if detail else ""))
