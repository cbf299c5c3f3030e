import pytest

from invarlab import Body, ScenarioError, Vec3
from invarlab.audits import audit_names, format_catalog, run_audits
from invarlab.scenario import AdditionConfig, IntegratorConfig, Scenario


def scenario_with(**overrides):
    base = dict(
        name="unit",
        bodies=(
            Body("A", 1.0, Vec3(0.66, 0, 0), Vec3(0, 1.1663058605140249, 0)),
            Body("B", 2.0, Vec3(-0.33, 0, 0), Vec3(0, -0.5831529302570124, 0)),
        ),
        laws=(),
        audits=(),
        integrator=None,
    )
    base.update(overrides)
    return Scenario(**base)


def test_unknown_audit_name_is_scenario_error():
    sc = scenario_with(audits=("momentum", "no-such-audit"))
    with pytest.raises(ScenarioError, match="no-such-audit"):
        run_audits(sc, seed=1)


def test_report_holds_each_requested_audit_once_in_catalog_order():
    from invarlab import gravity

    sc = scenario_with(
        laws=(gravity(1.0),),
        audits=("momentum", "frame-group", "momentum", "exchange"),
        integrator=IntegratorConfig("rk4", 0.01, 1.0),
    )
    report = run_audits(sc, seed=3)
    assert [r.audit for r in report.results] == ["frame-group", "exchange", "momentum"]
    assert report.overall == "PASS"


def test_energy_audit_errors_for_non_central_law():
    from invarlab import perp_demo

    sc = scenario_with(
        laws=(perp_demo(1.0),),
        audits=("energy",),
        integrator=IntegratorConfig("rk4", 0.01, 0.1),
    )
    report = run_audits(sc, seed=1)
    assert report.results[0].verdict == "ERROR"
    assert "undefined" in report.results[0].detail
    assert report.overall == "FAIL"


def test_trajectory_audit_without_integrator_block_errors():
    from invarlab import gravity

    sc = scenario_with(laws=(gravity(1.0),), audits=("momentum",))
    report = run_audits(sc, seed=1)
    assert report.results[0].verdict == "ERROR"
    assert "integrator" in report.results[0].detail


def test_oplus_audit_covers_both_shipped_profiles():
    for g_name in ("lorentz", "rational"):
        sc = scenario_with(
            audits=("oplus-group", "proper-time"),
            addition=AdditionConfig(g_name=g_name, c=2.0, samples=50, max_speed=0.9),
        )
        report = run_audits(sc, seed=5)
        assert all(r.passed for r in report.results), report.summary_lines()


def test_additivity_audit_defaults_to_mass_for_gravity():
    from invarlab import gravity

    sc = scenario_with(laws=(gravity(1.0),), audits=("additivity",))
    report = run_audits(sc, seed=1)
    assert report.results[0].passed
    assert "'mass'" in report.results[0].detail


def test_results_do_not_depend_on_which_other_audits_run():
    from invarlab import gravity

    cfg = IntegratorConfig("rk4", 0.01, 1.0)
    alone = run_audits(
        scenario_with(laws=(gravity(1.0),), audits=("exchange",), integrator=cfg), seed=9
    )
    together = run_audits(
        scenario_with(
            laws=(gravity(1.0),), audits=("exchange", "frame-group", "momentum"), integrator=cfg
        ),
        seed=9,
    )
    lone = alone.results[0]
    paired = next(r for r in together.results if r.audit == "exchange")
    assert lone.residual == paired.residual


def test_bad_audit_param_type_is_an_error_verdict():
    from invarlab import gravity

    sc = scenario_with(
        laws=(gravity(1.0),),
        audits=("boost-covariance",),
        integrator=IntegratorConfig("rk4", 0.01, 0.5),
        audit_params={"boost-covariance": {"count": "ten"}},
    )
    report = run_audits(sc, seed=1)
    assert report.results[0].verdict == "ERROR"
    assert "boost-covariance.count" in report.results[0].detail


def test_catalog_listing_is_complete():
    names = audit_names()
    assert names == sorted(set(names), key=names.index)
    lines = format_catalog()
    assert len(lines) == len(names)
    for required in ("inertia", "oplus-group", "objectivity-sweep", "light-quotient"):
        assert required in names
