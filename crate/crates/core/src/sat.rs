//! A small DPLL solver: two watched literals, chronological backtracking,
//! a fixed branching order (lowest unassigned variable, true first) and
//! assumptions taken as the first decisions. Clauses can be added between
//! calls, which is how models are blocked during enumeration.

use crate::logic::{normalize_clause, Clause, CnfFormula, Literal};

/// `assignment[i - 1]` is the value of variable `i`.
pub type Assignment = Vec<bool>;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SolveResult {
    Sat(Assignment),
    Unsat,
}

impl SolveResult {
    pub fn model(self) -> Option<Assignment> {
        match self {
            SolveResult::Sat(a) => Some(a),
            SolveResult::Unsat => None,
        }
    }
}

fn code(l: Literal) -> usize {
    2 * l.unsigned_abs() as usize + usize::from(l < 0)
}

#[derive(Clone, Copy)]
struct Decision {
    lit: Literal,
    /// The opposite value has already been tried.
    flipped: bool,
    assumption: bool,
}

#[derive(Clone, Debug)]
pub struct Solver {
    num_vars: usize,
    /// Clauses of two or more literals; positions 0 and 1 are watched.
    clauses: Vec<Clause>,
    units: Vec<Literal>,
    has_empty: bool,
    /// Literal code → clauses watching that literal.
    watches: Vec<Vec<usize>>,
    values: Vec<Option<bool>>,
    trail: Vec<Literal>,
    trail_lim: Vec<usize>,
    qhead: usize,
}

impl Solver {
    pub fn new(cnf: &CnfFormula) -> Self {
        let n = cnf.num_vars();
        let mut s = Solver {
            num_vars: n,
            clauses: Vec::new(),
            units: Vec::new(),
            has_empty: false,
            watches: vec![Vec::new(); 2 * n + 2],
            values: vec![None; n + 1],
            trail: Vec::new(),
            trail_lim: Vec::new(),
            qhead: 0,
        };
        for c in &cnf.clauses {
            s.add_clause(c);
        }
        s
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    pub fn add_clause(&mut self, clause: &[Literal]) {
        assert!(
            clause
                .iter()
                .all(|l| *l != 0 && l.unsigned_abs() as usize <= self.num_vars),
            "clause mentions an undeclared variable"
        );
        let Some(c) = normalize_clause(clause.to_vec()) else {
            return;
        };
        match c.len() {
            0 => self.has_empty = true,
            1 => self.units.push(c[0]),
            _ => {
                let idx = self.clauses.len();
                self.watches[code(c[0])].push(idx);
                self.watches[code(c[1])].push(idx);
                self.clauses.push(c);
            }
        }
    }

    fn value(&self, l: Literal) -> Option<bool> {
        self.values[l.unsigned_abs() as usize].map(|v| v == (l > 0))
    }

    fn assign(&mut self, l: Literal) {
        self.values[l.unsigned_abs() as usize] = Some(l > 0);
        self.trail.push(l);
    }

    /// Assigns `l` unless it is already set; `false` when it is false.
    fn enqueue(&mut self, l: Literal) -> bool {
        match self.value(l) {
            Some(v) => v,
            None => {
                self.assign(l);
                true
            }
        }
    }

    fn undo_to(&mut self, len: usize) {
        while self.trail.len() > len {
            let l = self.trail.pop().expect("non-empty trail");
            self.values[l.unsigned_abs() as usize] = None;
        }
        self.qhead = self.qhead.min(len);
    }

    /// Unit propagation; `false` on conflict.
    fn propagate(&mut self) -> bool {
        while self.qhead < self.trail.len() {
            let false_lit = -self.trail[self.qhead];
            self.qhead += 1;
            let watchers = std::mem::take(&mut self.watches[code(false_lit)]);
            let mut keep = Vec::with_capacity(watchers.len());
            let mut ok = true;
            for (pos, &ci) in watchers.iter().enumerate() {
                if !ok {
                    keep.extend_from_slice(&watchers[pos..]);
                    break;
                }
                let clause = &mut self.clauses[ci];
                if clause[0] == false_lit {
                    clause.swap(0, 1);
                }
                let first = clause[0];
                if self.values[first.unsigned_abs() as usize] == Some(first > 0) {
                    keep.push(ci);
                    continue;
                }
                let replacement = (2..clause.len()).find(|&k| {
                    let l = clause[k];
                    self.values[l.unsigned_abs() as usize] != Some(l < 0)
                });
                if let Some(k) = replacement {
                    clause.swap(1, k);
                    let new_watch = clause[1];
                    self.watches[code(new_watch)].push(ci);
                    continue;
                }
                keep.push(ci);
                if !self.enqueue(first) {
                    ok = false;
                }
            }
            self.watches[code(false_lit)].extend(keep);
            if !ok {
                return false;
            }
        }
        true
    }

    /// Searches for a total model that satisfies every clause and makes all
    /// `assumptions` true.
    pub fn solve(&mut self, assumptions: &[Literal]) -> SolveResult {
        assert!(
            assumptions
                .iter()
                .all(|l| *l != 0 && l.unsigned_abs() as usize <= self.num_vars),
            "assumption mentions an undeclared variable"
        );
        self.undo_to(0);
        self.trail_lim.clear();
        self.qhead = 0;
        if self.has_empty {
            return SolveResult::Unsat;
        }
        for i in 0..self.units.len() {
            if !self.enqueue(self.units[i]) {
                return SolveResult::Unsat;
            }
        }
        if !self.propagate() {
            return SolveResult::Unsat;
        }

        let mut decisions: Vec<Decision> = Vec::new();
        let mut next_assumption = 0;
        let mut next_var = 1;
        loop {
            let decision = if next_assumption < assumptions.len() {
                let lit = assumptions[next_assumption];
                next_assumption += 1;
                match self.value(lit) {
                    Some(true) => continue,
                    Some(false) => return SolveResult::Unsat,
                    None => Decision {
                        lit,
                        flipped: false,
                        assumption: true,
                    },
                }
            } else {
                while next_var <= self.num_vars && self.values[next_var].is_some() {
                    next_var += 1;
                }
                if next_var > self.num_vars {
                    break;
                }
                Decision {
                    lit: next_var as Literal,
                    flipped: false,
                    assumption: false,
                }
            };
            self.trail_lim.push(self.trail.len());
            self.assign(decision.lit);
            decisions.push(decision);
            while !self.propagate() {
                // chronological backtracking: flip the latest untried decision
                loop {
                    let Some(d) = decisions.pop() else {
                        return SolveResult::Unsat;
                    };
                    let start = self.trail_lim.pop().expect("one level per decision");
                    self.undo_to(start);
                    if d.assumption {
                        return SolveResult::Unsat;
                    }
                    if !d.flipped {
                        self.trail_lim.push(self.trail.len());
                        self.assign(-d.lit);
                        decisions.push(Decision {
                            lit: -d.lit,
                            flipped: true,
                            assumption: false,
                        });
                        break;
                    }
                }
                next_var = 1;
            }
        }
        let model = (1..=self.num_vars)
            .map(|v| self.values[v].expect("every variable assigned"))
            .collect();
        self.undo_to(0);
        SolveResult::Sat(model)
    }
}

pub fn solve(c: &CnfFormula, assumptions: &[Literal]) -> SolveResult {
    Solver::new(c).solve(assumptions)
}

/// The clause excluding exactly `a`.
pub fn blocking_clause(a: &Assignment) -> Clause {
    a.iter()
        .enumerate()
        .map(|(i, &v)| {
            let var = i as Literal + 1;
            if v {
                -var
            } else {
                var
            }
        })
        .collect()
}

pub fn block(c: &CnfFormula, a: &Assignment) -> CnfFormula {
    let mut out = c.clone();
    if let Some(clause) = normalize_clause(blocking_clause(a)) {
        if !out.clauses.contains(&clause) {
            out.clauses.push(clause);
            out.clauses.sort();
        }
    }
    out
}

/// Clause-by-clause check of a total assignment.
pub fn verify(c: &CnfFormula, a: &Assignment) -> bool {
    if a.len() != c.num_vars() {
        return false;
    }
    c.clauses.iter().all(|clause| {
        clause.iter().any(|&l| {
            let value = a[l.unsigned_abs() as usize - 1];
            (l > 0) == value
        })
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn cnf(n: usize, clauses: &[&[Literal]]) -> CnfFormula {
        CnfFormula {
            variables: (1..=n).map(|i| format!("x{i}")).collect(),
            clauses: clauses.iter().map(|c| c.to_vec()).collect(),
        }
    }

    fn all_models(c: &CnfFormula) -> Vec<Assignment> {
        let n = c.num_vars();
        (0..1u32 << n)
            .map(|bits| (0..n).map(|i| bits >> i & 1 == 1).collect::<Assignment>())
            .filter(|a| verify(c, a))
            .collect()
    }

    fn enumerate(c: &CnfFormula) -> Vec<Assignment> {
        let mut solver = Solver::new(c);
        let mut out = Vec::new();
        while let SolveResult::Sat(m) = solver.solve(&[]) {
            solver.add_clause(&blocking_clause(&m));
            out.push(m);
        }
        out
    }

    #[test]
    fn unit_propagation() {
        let c = cnf(2, &[&[1, 2], &[-1]]);
        assert_eq!(solve(&c, &[]), SolveResult::Sat(vec![false, true]));
    }

    #[test]
    fn contradiction() {
        assert_eq!(solve(&cnf(1, &[&[1], &[-1]]), &[]), SolveResult::Unsat);
        assert_eq!(solve(&cnf(1, &[&[]]), &[]), SolveResult::Unsat);
    }

    #[test]
    fn branching_prefers_true_in_index_order() {
        assert_eq!(solve(&cnf(3, &[]), &[]), SolveResult::Sat(vec![true; 3]));
        let c = cnf(2, &[&[-1, -2]]);
        assert_eq!(solve(&c, &[]), SolveResult::Sat(vec![true, false]));
    }

    #[test]
    fn assumptions_are_respected() {
        let c = cnf(2, &[&[-1, 2]]);
        assert_eq!(solve(&c, &[-2]), SolveResult::Sat(vec![false, false]));
        assert_eq!(solve(&cnf(2, &[&[-1]]), &[1]), SolveResult::Unsat);
        // the assumption itself forces a conflict through propagation
        assert_eq!(solve(&cnf(2, &[&[-1, 2], &[-1, -2]]), &[1]), SolveResult::Unsat);
    }

    #[test]
    fn blocking_clause_definition() {
        assert_eq!(blocking_clause(&vec![true, false]), vec![-1, 2]);
        let c = block(&cnf(2, &[]), &vec![true, false]);
        assert_eq!(c.clauses, vec![vec![-1, 2]]);
        assert!(!verify(&c, &vec![true, false]));
    }

    #[test]
    fn blocking_everything_is_unsat() {
        let mut c = cnf(2, &[]);
        for bits in 0..4u8 {
            c = block(&c, &vec![bits & 1 == 1, bits & 2 == 2]);
        }
        assert_eq!(solve(&c, &[]), SolveResult::Unsat);
    }

    #[test]
    fn enumerating_a_disjunction() {
        let models = enumerate(&cnf(2, &[&[1, 2]]));
        assert_eq!(models.len(), 3);
    }

    #[test]
    fn verify_rejects_flipped_unit() {
        let c = cnf(2, &[&[2]]);
        let SolveResult::Sat(mut m) = solve(&c, &[]) else {
            panic!()
        };
        assert!(verify(&c, &m));
        m[1] = !m[1];
        assert!(!verify(&c, &m));
    }

    #[test]
    fn zero_variables() {
        assert_eq!(solve(&cnf(0, &[]), &[]), SolveResult::Sat(vec![]));
    }

    fn arb_cnf(max_vars: usize) -> impl Strategy<Value = CnfFormula> {
        (1..=max_vars).prop_flat_map(|n| {
            let lit = (1..=n as Literal, any::<bool>()).prop_map(|(v, s)| if s { v } else { -v });
            prop::collection::vec(prop::collection::vec(lit, 1..=3), 0..(4 * n + 1))
                .prop_map(move |cl| CnfFormula {
                    variables: (1..=n).map(|i| format!("x{i}")).collect(),
                    clauses: cl,
                })
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(200))]

        #[test]
        fn agrees_with_truth_table(c in arb_cnf(12)) {
            let oracle = !all_models(&c).is_empty();
            match solve(&c, &[]) {
                SolveResult::Sat(m) => {
                    prop_assert!(oracle);
                    prop_assert!(verify(&c, &m));
                }
                SolveResult::Unsat => prop_assert!(!oracle),
            }
        }

        #[test]
        fn enumeration_is_exact(c in arb_cnf(8)) {
            let mut found = enumerate(&c);
            found.sort();
            let mut expected = all_models(&c);
            expected.sort();
            prop_assert_eq!(found, expected);
        }

        #[test]
        fn assumptions_match_oracle(c in arb_cnf(8), a in 1..=8i32, pos in any::<bool>()) {
            let n = c.num_vars() as i32;
            let lit = if pos { (a - 1) % n + 1 } else { -((a - 1) % n + 1) };
            let oracle = all_models(&c).into_iter().any(|m| m[lit.unsigned_abs() as usize - 1] == (lit > 0));
            match solve(&c, &[lit]) {
                SolveResult::Sat(m) => {
                    prop_assert!(oracle && verify(&c, &m));
                    prop_assert_eq!(m[lit.unsigned_abs() as usize - 1], lit > 0);
                }
                SolveResult::Unsat => prop_assert!(!oracle),
            }
        }

        #[test]
        fn verify_matches_direct_evaluation(c in arb_cnf(10), bits in any::<u32>()) {
            let a: Assignment = (0..c.num_vars()).map(|i| bits >> i & 1 == 1).collect();
            let direct = c.clauses.iter().all(|cl| cl.iter().any(|&l| a[l.unsigned_abs() as usize - 1] == (l > 0)));
            prop_assert_eq!(verify(&c, &a), direct);
        }

        #[test]
        fn deterministic(c in arb_cnf(10)) {
            prop_assert_eq!(enumerate(&c), enumerate(&c));
        }
    }
}
