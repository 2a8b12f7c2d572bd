use std::ffi::CString;
use std::sync::Once;

use pyo3::prelude::*;
use pyo3::types::PyDict;

use braided::braided;

static INIT: Once = Once::new();

fn with_module<F: FnOnce(&Bound<'_, PyDict>)>(f: F) {
    INIT.call_once(|| {
        pyo3::append_to_inittab!(braided);
        Python::initialize();
    });
    Python::attach(|py| {
        let globals = PyDict::new(py);
        globals.set_item("braided", py.import("braided").unwrap()).unwrap();
        let data = concat!(env!("CARGO_MANIFEST_DIR"), "/../../data");
        globals.set_item("DATA", data).unwrap();
        f(&globals);
    });
}

fn run(globals: &Bound<'_, PyDict>, code: &str) {
    let code = CString::new(code).unwrap();
    if let Err(e) = globals.py().run(&code, Some(globals), None) {
        panic!("python failed: {e}");
    }
}

#[test]
fn quantum_layer_from_python() {
    with_module(|g| {
        run(
            g,
            r#"
r = braided.RMatrix.from_bilinear_form([[2, -1], [-1, 2]])
assert r.dim == 2
assert r.entry(0, 0, 0, 0) == "q^2", r.entry(0, 0, 0, 0)
assert r.ybe_check() == {"holds": True, "failure": None}
c = braided.Calculus(r)
assert c.ranks(3) == [1, 2, 4, 6]
k = c.kernel(3)
assert k["kernel_dim"] == 2 and len(k["generators"]) == 2
assert c.pairing([1], [0]) == "0"
"#,
        );
    });
}

#[test]
fn errors_map_to_exception_classes() {
    with_module(|g| {
        run(
            g,
            r#"
assert issubclass(braided.PropertyViolation, braided.BraidedError)
assert issubclass(braided.InputError, braided.BraidedError)
try:
    braided.RMatrix.from_json('{"dim": 2')
except braided.InputError:
    pass
else:
    raise AssertionError("truncated file accepted")
try:
    singular = braided.Calculus(braided.RMatrix.from_bilinear_form([[1, -1], [-1, 1]]))
    singular.exp(4)
except braided.PropertyViolation:
    pass
else:
    raise AssertionError("singular factorial not reported")
try:
    braided.Calculus(braided.RMatrix.from_bilinear_form([[2]])).pairing([3], [0])
except braided.InputError:
    pass
else:
    raise AssertionError("letter out of range accepted")
"#,
        );
    });
}

#[test]
fn lie_layer_from_python() {
    with_module(|g| {
        run(
            g,
            r#"
import pathlib
rep = (pathlib.Path(DATA) / "sl2_c3.json").read_text()
sl2 = braided.LieBialgebra.sl2()
assert sl2.labels == ["h", "e", "f"] and sl2.quasitriangular
assert sl2.central_charge(rep) == "1"
assert sl2.central_charge(rep, mu="2") == "1/4"
big, info = sl2.induct(rep)
assert big.dim == 10 and info["lambda"] == "1" and info["all_passed"]
try:
    sl2.induct(rep, lam="5")
except braided.PropertyViolation:
    pass
else:
    raise AssertionError("wrong central charge accepted")
"#,
        );
    });
}
