//! Binary matrix dump: ASCII header `KSTMAT n side`, then the n×n complex
//! entries row-major as little-endian 64-bit float pairs (re, im).

use cauchy_szego_core::operator::BoundaryOperatorMatrix;
use std::io::Write;

pub fn write_kstmat<W: Write>(mut w: W, mat: &BoundaryOperatorMatrix) -> std::io::Result<()> {
    let n = mat.n();
    writeln!(w, "KSTMAT {n} {}", mat.side())?;
    for i in 0..n {
        for j in 0..n {
            let v = mat.entry(i, j);
            w.write_all(&v.re.to_le_bytes())?;
            w.write_all(&v.im.to_le_bytes())?;
        }
    }
    Ok(())
}
