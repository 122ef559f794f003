use pyo3::prelude::*;

#[pymodule]
fn compat_match_py(_m: &Bound<'_, PyModule>) -> PyResult<()> {
    Ok(())
}
