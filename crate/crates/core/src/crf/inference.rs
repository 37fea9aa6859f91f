//! Log-space inference over a two-label chain.

use crate::supervise::Label;

pub const NUM_LABELS: usize = 2;

#[inline]
pub fn logsumexp(a: f64, b: f64) -> f64 {
    if a == f64::NEG_INFINITY && b == f64::NEG_INFINITY {
        return f64::NEG_INFINITY;
    }
    if a > b {
        a + (b - a).exp().ln_1p()
    } else {
        b + (a - b).exp().ln_1p()
    }
}

/// Per-position state scores and the position-independent transition scores.
#[derive(Debug, Clone, PartialEq)]
pub struct Potentials {
    /// `state[i][y]`: summed weights of the active features at `i` for label `y`.
    pub state: Vec<[f64; NUM_LABELS]>,
    /// `transition[y][y2]`: score of label `y` followed by `y2`.
    pub transition: [[f64; NUM_LABELS]; NUM_LABELS],
}

#[derive(Debug, Clone, PartialEq)]
pub struct ForwardBackward {
    pub log_partition: f64,
    /// `marginals[i][y] = P(label_i = y | sentence)`.
    pub marginals: Vec<[f64; NUM_LABELS]>,
    alpha: Vec<[f64; NUM_LABELS]>,
    beta: Vec<[f64; NUM_LABELS]>,
}

impl ForwardBackward {
    /// Log partition from the backward recursion alone.
    pub fn backward_log_partition(&self, potentials: &Potentials) -> f64 {
        if self.beta.is_empty() {
            return 0.0;
        }
        (0..NUM_LABELS)
            .map(|y| potentials.state[0][y] + self.beta[0][y])
            .fold(f64::NEG_INFINITY, logsumexp)
    }

    /// `P(label_i = a, label_{i+1} = b)`.
    pub fn pair_marginal(&self, potentials: &Potentials, i: usize, a: usize, b: usize) -> f64 {
        (self.alpha[i][a] + potentials.transition[a][b] + potentials.state[i + 1][b]
            + self.beta[i + 1][b]
            - self.log_partition)
            .exp()
    }

    pub fn card_marginal(&self, i: usize) -> f64 {
        self.marginals[i][Label::Card.index()]
    }
}

impl Potentials {
    pub fn len(&self) -> usize {
        self.state.len()
    }

    pub fn is_empty(&self) -> bool {
        self.state.is_empty()
    }

    /// Unnormalized log score of a labeling.
    pub fn score(&self, labels: &[Label]) -> f64 {
        let mut s = 0.0;
        for (i, l) in labels.iter().enumerate() {
            s += self.state[i][l.index()];
            if i > 0 {
                s += self.transition[labels[i - 1].index()][l.index()];
            }
        }
        s
    }

    pub fn forward_backward(&self) -> ForwardBackward {
        let n = self.state.len();
        if n == 0 {
            return ForwardBackward {
                log_partition: 0.0,
                marginals: Vec::new(),
                alpha: Vec::new(),
                beta: Vec::new(),
            };
        }
        let mut alpha = vec![[0.0; NUM_LABELS]; n];
        alpha[0] = self.state[0];
        for i in 1..n {
            for y in 0..NUM_LABELS {
                let acc = (0..NUM_LABELS)
                    .map(|p| alpha[i - 1][p] + self.transition[p][y])
                    .fold(f64::NEG_INFINITY, logsumexp);
                alpha[i][y] = self.state[i][y] + acc;
            }
        }
        let mut beta = vec![[0.0; NUM_LABELS]; n];
        for i in (0..n - 1).rev() {
            for y in 0..NUM_LABELS {
                beta[i][y] = (0..NUM_LABELS)
                    .map(|q| self.transition[y][q] + self.state[i + 1][q] + beta[i + 1][q])
                    .fold(f64::NEG_INFINITY, logsumexp);
            }
        }
        let log_partition = alpha[n - 1].iter().copied().fold(f64::NEG_INFINITY, logsumexp);
        let marginals = (0..n)
            .map(|i| {
                // normalized per row so rounding never pushes a probability past 1
                let mut row = [0.0; NUM_LABELS];
                let joint: [f64; NUM_LABELS] = std::array::from_fn(|y| alpha[i][y] + beta[i][y]);
                let norm = joint.iter().copied().fold(f64::NEG_INFINITY, logsumexp);
                for y in 0..NUM_LABELS {
                    row[y] = (joint[y] - norm).exp();
                }
                row
            })
            .collect();
        ForwardBackward {
            log_partition,
            marginals,
            alpha,
            beta,
        }
    }

    /// Highest-scoring labeling and its score. Ties go to O.
    pub fn viterbi(&self) -> (Vec<Label>, f64) {
        let n = self.state.len();
        if n == 0 {
            return (Vec::new(), 0.0);
        }
        // O is examined first and only replaced on a strictly better score.
        let order = [Label::O.index(), Label::Card.index()];
        let mut delta = vec![[0.0; NUM_LABELS]; n];
        let mut back = vec![[0usize; NUM_LABELS]; n];
        delta[0] = self.state[0];
        for i in 1..n {
            for y in 0..NUM_LABELS {
                let mut best = order[0];
                let mut best_score = delta[i - 1][best] + self.transition[best][y];
                for &p in &order[1..] {
                    let s = delta[i - 1][p] + self.transition[p][y];
                    if s > best_score {
                        best = p;
                        best_score = s;
                    }
                }
                delta[i][y] = self.state[i][y] + best_score;
                back[i][y] = best;
            }
        }
        let mut last = order[0];
        for &y in &order[1..] {
            if delta[n - 1][y] > delta[n - 1][last] {
                last = y;
            }
        }
        let score = delta[n - 1][last];
        let mut path = vec![0usize; n];
        path[n - 1] = last;
        for i in (1..n).rev() {
            path[i - 1] = back[i][path[i]];
        }
        (path.into_iter().map(Label::from_index).collect(), score)
    }
}
