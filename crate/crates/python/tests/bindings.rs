use pyo3::prelude::*;
use pyo3::types::PyDict;

use prymcheck_py::prymcheck_py;

#[test]
fn module_runs_inside_an_embedded_interpreter() {
    pyo3::append_to_inittab!(prymcheck_py);
    Python::initialize();
    Python::attach(|py| -> PyResult<()> {
        let m = py.import("prymcheck_py")?;
        let bf: (i64, i64) = m.getattr("pluecker_solve_bf")?.call1((6, 18, 4))?.extract()?;
        assert_eq!(bf, (96, 36));
        let class: String = m.getattr("classify_quotient")?.call1((vec![(2u32, vec![1i64, 1, 1, 1])],))?.extract()?;
        assert_eq!(class, "terminal");
        let total: i64 = m.getattr("ledger_total")?.call1(("cubic", "derived"))?.extract()?;
        assert_eq!(total, 2355);

        let kwargs = PyDict::new(py);
        kwargs.set_item("torus_weights", vec![vec![1i64, 1, 1, 1, -1, -1, -1, -1]])?;
        let action = m.getattr("DiagonalAction")?.call((8,), Some(&kwargs))?;
        let pres = action.call_method1("presentation", (4,))?;
        assert_eq!(pres.len()?, 16);

        let err = m.getattr("run")?.call1(("nonsense",)).unwrap_err();
        assert!(err.is_instance_of::<pyo3::exceptions::PyValueError>(py));
        Ok(())
    })
    .unwrap();
}
