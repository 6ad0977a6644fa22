use crate::complex::{Hochschild, TateElement};
use crate::linalg::Scalar;

impl Hochschild {
    /// The non-degenerate pairing `⟨α, β⟩` between `D^m` and `D^{-m-1}`:
    /// `⟨φ, (g_0; g)⟩ = ⟨φ(g), g_0⟩` with `⟨g, h⟩ = [gh = e]` on `kG`.
    /// Elements of other degree combinations pair to zero.
    pub fn pairing(&self, a: &TateElement, b: &TateElement) -> Scalar {
        if a.degree + b.degree != -1 {
            return 0;
        }
        let (cochain, chain) = if a.degree >= 0 { (a, b) } else { (b, a) };
        let f = self.field();
        let g = self.group();
        let n = g.order();
        cochain.coeffs.iter().fold(0, |acc, (i, c)| {
            let j = (i / n) * n + g.inv(i % n);
            f.add(acc, f.mul(c, chain.coeffs.get(j)))
        })
    }
}
