import pytest

from elastica.util.text import run_name, slugify


@pytest.mark.parametrize(
    "text, slug",
    [
        ("Über Kürve", "uber-kurve"),
        ("  Loss of convexity ", "loss-of-convexity"),
        ("omega_two_mu_1.0", "omega_two_mu_1-0"),
        ("figure eight (double)", "figure-eight-double"),
        ("!!!", "run"),
    ],
)
def test_slugify(text, slug) -> None:
    assert slugify(text) == slug


def test_run_name() -> None:
    assert run_name("/tmp/configs/Loss of convexity.txt") == "loss-of-convexity"
    assert run_name("neck.txt") == "neck"
