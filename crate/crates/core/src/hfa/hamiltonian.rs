use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use super::{Hyperword, Nfh, Quantifier};
use crate::{Error, Result, Sigma, Symbol};

/// An undirected graph on vertices `0..n`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Graph {
    pub n: usize,
    pub edges: Vec<(usize, usize)>,
}

impl Graph {
    pub fn new(n: usize, edges: Vec<(usize, usize)>) -> Result<Graph> {
        if n < 2 {
            return Err(Error::InvalidGraph(format!("need at least 2 vertices, got {n}")));
        }
        for &(u, v) in &edges {
            if u >= n || v >= n {
                return Err(Error::InvalidGraph(format!("edge ({u},{v}) out of range")));
            }
            if u == v {
                return Err(Error::InvalidGraph(format!("self-loop at {u}")));
            }
        }
        Ok(Graph { n, edges })
    }
}

/// The finite-membership instance for Hamiltonicity.
///
/// Over Σ = {0, 1} with one existential variable per vertex, the underlying
/// automaton has the vertices as states, vertex 0 as the only initial and
/// accepting state, and a transition `vᵢ → vⱼ` per edge direction labelled
/// by the letter with a single 1 in track i. The hyperword is
/// `{0^i 1 0^(n−i−1)}`. An accepting run assigns each word to exactly one
/// variable and spells a cycle through every vertex, so the instance is a
/// member iff the graph has a Hamiltonian cycle.
pub fn gen_hamiltonian(g: &Graph) -> Result<(Nfh, Hyperword)> {
    let g = Graph::new(g.n, g.edges.clone())?;
    let n = g.n;
    let sigma = Sigma::new(["0", "1"]).expect("valid alphabet");
    let zero = sigma.symbol("0").expect("0");
    let one = sigma.symbol("1").expect("1");
    let mut fa = Nfh::blank_underlying(&sigma, n);
    for v in 0..n {
        fa.add_state(v == 0);
    }
    fa.set_initial(0);
    let nfh_codec = crate::zip::LetterCodec::new(2, n);
    let sigma_letter = |i: usize| -> usize {
        let comps: Vec<Symbol> = (0..n).map(|t| if t == i { one } else { zero }).collect();
        nfh_codec.encode(&comps)
    };
    for &(u, v) in &g.edges {
        fa.add_transition_id(u, sigma_letter(u), v);
        fa.add_transition_id(v, sigma_letter(v), u);
    }
    let words = (0..n).map(|i| {
        let mut w = vec![zero; n];
        w[i] = one;
        w
    });
    let nfh = Nfh::new(sigma, vec![Quantifier::Exists; n], fa)?;
    Ok((nfh, Hyperword::new(words)?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hfa::member;

    #[test]
    fn small_graphs() {
        let k3 = Graph::new(3, vec![(0, 1), (1, 2), (2, 0)]).unwrap();
        let (a, s) = gen_hamiltonian(&k3).unwrap();
        assert!(member(&a, &s).unwrap());
        let path = Graph::new(3, vec![(0, 1), (1, 2)]).unwrap();
        let (a, s) = gen_hamiltonian(&path).unwrap();
        assert!(!member(&a, &s).unwrap());
        let k4 = Graph::new(4, vec![(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
        let (a, s) = gen_hamiltonian(&k4).unwrap();
        assert!(member(&a, &s).unwrap());
        assert!(Graph::new(1, vec![]).is_err());
        assert!(Graph::new(3, vec![(1, 1)]).is_err());
    }
}
