//! Equilibria as fixed points of best-response maps.
//!
//! A two-player zero-sum game (first player minimizes the payoff, second
//! maximizes it) or an n-player game (each player maximizes their own
//! payoff) induces a best-response map on the product of the strategy
//! boxes. Equilibria — saddle points, Nash points — are exactly the fixed
//! points of that map, so the paving machinery localizes them rigorously.
//!
//! The image of a box under the best-response map is built per player from
//! an argmin enclosure: the opponent block is treated as an interval
//! parameter, so the returned boxes cover the best responses to *every*
//! strategy profile in the queried box. That uniformity is what makes the
//! paving's discards sound.

use crate::expr::{EvalError, Expr};
use crate::interval::{BoxN, Interval, IntervalError};
use crate::multimap::{ImageEnclosure, MapError, PointResidualOracle};
use crate::pave::{enclose_fixed_points, PaveConfig, PaveError, Paving};
use serde::Serialize;

#[derive(Debug, thiserror::Error)]
pub enum GameError {
    #[error(transparent)]
    Eval(#[from] EvalError),
    #[error(transparent)]
    Interval(#[from] IntervalError),
    #[error(transparent)]
    Pave(#[from] PaveError),
    #[error("invalid game: {0}")]
    InvalidGame(String),
    #[error("invalid search configuration: {0}")]
    InvalidConfig(String),
    #[error("bounds closed to width {achieved} but {requested} was requested")]
    ToleranceNotReached { requested: f64, achieved: f64 },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GameMode {
    /// Two players, one payoff: the first player minimizes it, the second
    /// maximizes it.
    Saddle,
    /// One payoff per player; every player maximizes their own.
    Nash,
}

#[derive(Debug, Clone)]
pub struct Player {
    pub name: String,
    pub domain: BoxN,
}

impl Player {
    pub fn new(name: impl Into<String>, domain: BoxN) -> Player {
        Player {
            name: name.into(),
            domain,
        }
    }
}

/// Variable names a player contributes to the payoff expressions: the bare
/// name for a one-dimensional strategy box, name plus 1-based coordinate
/// suffix otherwise.
fn flat_vars(players: &[Player]) -> Vec<String> {
    let mut out = Vec::new();
    for p in players {
        if p.domain.dim() == 1 {
            out.push(p.name.clone());
        } else {
            for k in 1..=p.domain.dim() {
                out.push(format!("{}{}", p.name, k));
            }
        }
    }
    out
}

#[derive(Debug, Clone)]
pub struct GameSpec {
    mode: GameMode,
    players: Vec<Player>,
    payoffs: Vec<Expr>,
    domain: BoxN,
    positions: Vec<Vec<usize>>,
}

impl GameSpec {
    pub fn new_saddle(
        minimizer: Player,
        maximizer: Player,
        payoff: Expr,
    ) -> Result<GameSpec, GameError> {
        GameSpec::build(GameMode::Saddle, vec![minimizer, maximizer], vec![payoff])
    }

    pub fn new_nash(players: Vec<Player>, payoffs: Vec<Expr>) -> Result<GameSpec, GameError> {
        GameSpec::build(GameMode::Nash, players, payoffs)
    }

    fn build(
        mode: GameMode,
        players: Vec<Player>,
        payoffs: Vec<Expr>,
    ) -> Result<GameSpec, GameError> {
        if players.is_empty() {
            return Err(GameError::InvalidGame("a game needs players".into()));
        }
        let expected_payoffs = match mode {
            GameMode::Saddle => 1,
            GameMode::Nash => players.len(),
        };
        if payoffs.len() != expected_payoffs {
            return Err(GameError::InvalidGame(format!(
                "expected {expected_payoffs} payoff(s), got {}",
                payoffs.len()
            )));
        }
        for p in &players {
            if p.name.is_empty() {
                return Err(GameError::InvalidGame("player names must be nonempty".into()));
            }
        }
        for i in 0..players.len() {
            for j in i + 1..players.len() {
                if players[i].name == players[j].name {
                    return Err(GameError::InvalidGame(format!(
                        "duplicate player name {:?}",
                        players[i].name
                    )));
                }
            }
        }
        let vars = flat_vars(&players);
        for i in 0..vars.len() {
            for j in i + 1..vars.len() {
                if vars[i] == vars[j] {
                    return Err(GameError::InvalidGame(format!(
                        "player coordinates collide on variable {:?}",
                        vars[i]
                    )));
                }
            }
        }
        for payoff in &payoffs {
            if payoff.vars() != vars.as_slice() {
                return Err(GameError::InvalidGame(format!(
                    "payoff variables {:?} do not match the player coordinates {:?}",
                    payoff.vars(),
                    vars
                )));
            }
        }
        let mut dims = Vec::new();
        let mut positions = Vec::new();
        for p in &players {
            let start = dims.len();
            dims.extend_from_slice(p.domain.dims());
            positions.push((start..dims.len()).collect());
        }
        let domain = BoxN::new(dims)?;
        Ok(GameSpec {
            mode,
            players,
            payoffs,
            domain,
            positions,
        })
    }

    pub fn mode(&self) -> GameMode {
        self.mode
    }

    pub fn players(&self) -> &[Player] {
        &self.players
    }

    pub fn payoffs(&self) -> &[Expr] {
        &self.payoffs
    }

    /// Product of the player strategy boxes, coordinates in player order.
    pub fn domain(&self) -> &BoxN {
        &self.domain
    }
}

/// Subdivision depth and sampling tolerance for best-response searches.
#[derive(Debug, Clone, Copy)]
pub struct ArgoptConfig {
    /// Rounds of leaf bisection in argmin enclosures; leaves shrink to
    /// about `width / 2^depth` in each refined dimension.
    pub depth: u32,
    /// Grid step for sampled best responses and residuals.
    pub tol: f64,
}

impl Default for ArgoptConfig {
    fn default() -> ArgoptConfig {
        ArgoptConfig {
            depth: 10,
            tol: 1e-3,
        }
    }
}

impl ArgoptConfig {
    fn validate(&self) -> Result<(), GameError> {
        if !(1..=24).contains(&self.depth) {
            return Err(GameError::InvalidConfig(format!(
                "depth must be between 1 and 24, got {}",
                self.depth
            )));
        }
        if !(self.tol > 0.0 && self.tol.is_finite()) {
            return Err(GameError::InvalidConfig(format!(
                "tol must be positive and finite, got {}",
                self.tol
            )));
        }
        Ok(())
    }
}

fn fill_slots(buf: &mut [Interval], b: &BoxN, positions: &[usize]) {
    for (k, &pos) in positions.iter().enumerate() {
        buf[pos] = b.get(k);
    }
}

/// Leaves of a branch-and-bound minimization of `e` over `opt`, with the
/// slots in `param_positions` held at the parameter intervals. The union of
/// the returned leaves contains, for every point value of the parameters,
/// every minimizer of `e` over `opt`.
fn argmin_core(
    e: &Expr,
    opt: &BoxN,
    opt_positions: &[usize],
    param: Option<(&BoxN, &[usize])>,
    depth: u32,
) -> Result<Vec<BoxN>, EvalError> {
    let mut buf = vec![Interval::point(0.0).unwrap(); e.vars().len()];
    if let Some((pbox, ppos)) = param {
        fill_slots(&mut buf, pbox, ppos);
    }
    let mut leaves = vec![opt.clone()];
    for _ in 0..depth {
        let mut next = Vec::with_capacity(leaves.len() * 2);
        for leaf in &leaves {
            if leaf.diameter() == 0.0 {
                next.push(leaf.clone());
                continue;
            }
            let (l, r) = leaf.bisect()?;
            if l == *leaf || r == *leaf {
                next.push(leaf.clone());
            } else {
                next.push(l);
                next.push(r);
            }
        }
        let mut lower = Vec::with_capacity(next.len());
        let mut best_ub = f64::INFINITY;
        for leaf in &next {
            fill_slots(&mut buf, leaf, opt_positions);
            let v = e.eval_interval(&buf)?;
            best_ub = best_ub.min(v.hi());
            lower.push(v.lo());
        }
        leaves = next
            .into_iter()
            .zip(lower)
            .filter(|(_, lb)| *lb <= best_ub)
            .map(|(leaf, _)| leaf)
            .collect();
    }
    Ok(leaves)
}

/// Merge touching one-dimensional boxes; hull everything into one box when
/// the list stays longer than `cap`.
fn condense(leaves: Vec<BoxN>, cap: usize) -> Vec<BoxN> {
    let merged = if leaves.first().map(BoxN::dim) == Some(1) {
        let mut spans: Vec<(f64, f64)> = leaves
            .iter()
            .map(|b| (b.get(0).lo(), b.get(0).hi()))
            .collect();
        spans.sort_by(|a, b| a.0.total_cmp(&b.0));
        let mut out: Vec<(f64, f64)> = Vec::new();
        for (lo, hi) in spans {
            match out.last_mut() {
                Some(last) if lo <= last.1 => last.1 = last.1.max(hi),
                _ => out.push((lo, hi)),
            }
        }
        out.into_iter()
            .map(|(lo, hi)| BoxN::from_pairs(&[[lo, hi]]).expect("ordered span"))
            .collect()
    } else {
        leaves
    };
    if merged.len() > cap {
        let hull = merged
            .iter()
            .skip(1)
            .fold(merged[0].clone(), |acc, b| {
                acc.hull(b).expect("same dimension throughout")
            });
        return vec![hull];
    }
    merged
}

/// Enclose every minimizer of `e` over `opt_box`, uniformly over the
/// parameter box when one is given. Expression variables are the `opt_box`
/// coordinates followed by the `param_box` coordinates.
pub fn argmin_enclosure(
    e: &Expr,
    opt_box: &BoxN,
    param_box: Option<&BoxN>,
    cfg: &ArgoptConfig,
) -> Result<Vec<BoxN>, GameError> {
    cfg.validate()?;
    let od = opt_box.dim();
    let pd = param_box.map_or(0, BoxN::dim);
    if e.vars().len() != od + pd {
        return Err(GameError::InvalidGame(format!(
            "expression over {} variables used with {} optimization and {} parameter coordinates",
            e.vars().len(),
            od,
            pd
        )));
    }
    let opt_positions: Vec<usize> = (0..od).collect();
    let param_positions: Vec<usize> = (od..od + pd).collect();
    let leaves = argmin_core(
        e,
        opt_box,
        &opt_positions,
        param_box.map(|p| (p, param_positions.as_slice())),
        cfg.depth,
    )?;
    Ok(condense(leaves, 256))
}

fn cross_product(parts: &[Vec<BoxN>]) -> Vec<BoxN> {
    let mut out = Vec::new();
    if parts.iter().any(Vec::is_empty) {
        return out;
    }
    let mut idx = vec![0usize; parts.len()];
    'outer: loop {
        let mut dims = Vec::new();
        for (k, list) in parts.iter().enumerate() {
            dims.extend_from_slice(list[idx[k]].dims());
        }
        out.push(BoxN::new(dims).expect("players always contribute coordinates"));
        for k in (0..parts.len()).rev() {
            idx[k] += 1;
            if idx[k] < parts[k].len() {
                continue 'outer;
            }
            idx[k] = 0;
        }
        break;
    }
    out
}

/// The best-response map of a game: each player's block of the image is an
/// enclosure of that player's best responses to every profile in the
/// queried box. Fixed points are saddle points in saddle mode and Nash
/// equilibria in Nash mode.
#[derive(Debug, Clone)]
pub struct BestResponseMap {
    players: Vec<Player>,
    /// Per player, the payoff that player maximizes.
    utilities: Vec<Expr>,
    /// Negated utilities, minimized by the argmin search.
    objectives: Vec<Expr>,
    positions: Vec<Vec<usize>>,
    domain: BoxN,
    cfg: ArgoptConfig,
}

impl BestResponseMap {
    pub fn new(spec: &GameSpec, cfg: &ArgoptConfig) -> Result<BestResponseMap, GameError> {
        cfg.validate()?;
        let utilities = match spec.mode {
            GameMode::Saddle => vec![spec.payoffs[0].negated(), spec.payoffs[0].clone()],
            GameMode::Nash => spec.payoffs.clone(),
        };
        let objectives = utilities.iter().map(Expr::negated).collect();
        Ok(BestResponseMap {
            players: spec.players.clone(),
            utilities,
            objectives,
            positions: spec.positions.clone(),
            domain: spec.domain.clone(),
            cfg: *cfg,
        })
    }

    fn opponent_block(&self, i: usize, y: &BoxN) -> (BoxN, Vec<usize>) {
        let mut dims = Vec::new();
        let mut positions = Vec::new();
        for (j, block) in self.positions.iter().enumerate() {
            if j == i {
                continue;
            }
            for &pos in block {
                dims.push(y.get(pos));
                positions.push(pos);
            }
        }
        (BoxN::new(dims).expect("other players exist"), positions)
    }

    fn grid_counts(&self, player: usize) -> Vec<usize> {
        let dims = self.players[player].domain.dims();
        let mut ns: Vec<usize> = dims
            .iter()
            .map(|d| {
                if d.width() <= 0.0 {
                    return 1;
                }
                let half = (d.width() / (2.0 * self.cfg.tol)).ceil();
                let half = if half.is_finite() {
                    (half as usize).clamp(1, 1_000_000)
                } else {
                    1_000_000
                };
                2 * half + 1
            })
            .collect();
        loop {
            let product: f64 = ns.iter().map(|&n| n as f64).product();
            if product <= 4_194_304.0 {
                break;
            }
            let widest = (0..ns.len()).max_by_key(|&k| ns[k]).unwrap();
            if ns[widest] <= 3 {
                break;
            }
            ns[widest] = ((ns[widest] / 2) | 1).max(3);
        }
        ns
    }

    /// Sample the best response to `x` on a grid with step at most the
    /// configured tolerance: the nearest maximizing grid profile and the
    /// distance to it. `None` when `x` is outside the domain or no grid
    /// point evaluates to a finite payoff.
    pub fn sampled_best_response(&self, x: &[f64]) -> Option<(Vec<f64>, f64)> {
        if x.len() != self.domain.dim()
            || x.iter().any(|v| !v.is_finite())
            || !self.domain.contains_point(x)
        {
            return None;
        }
        let mut x_prime = x.to_vec();
        let mut worst = 0.0f64;
        let mut point = vec![0.0f64; x.len()];
        for i in 0..self.players.len() {
            point.copy_from_slice(x);
            let dims = self.players[i].domain.dims().to_vec();
            let ns = self.grid_counts(i);
            let mut counter = vec![0usize; dims.len()];
            let mut best_val = f64::NEG_INFINITY;
            let mut best_pt: Vec<f64> = Vec::new();
            let mut best_dist = f64::INFINITY;
            'grid: loop {
                for (d, &j) in counter.iter().enumerate() {
                    let n = ns[d];
                    let iv = dims[d];
                    let t = if n == 1 || j == 0 {
                        iv.lo()
                    } else if j == n - 1 {
                        iv.hi()
                    } else {
                        iv.lo() + iv.width() * (j as f64) / ((n - 1) as f64)
                    };
                    point[self.positions[i][d]] = t;
                }
                if let Ok(v) = self.utilities[i].eval_point(&point) {
                    if v > best_val {
                        best_val = v;
                        best_pt = self.positions[i].iter().map(|&p| point[p]).collect();
                        best_dist = self.positions[i]
                            .iter()
                            .map(|&p| (point[p] - x[p]).abs())
                            .fold(0.0, f64::max);
                    } else if v == best_val {
                        let d = self.positions[i]
                            .iter()
                            .map(|&p| (point[p] - x[p]).abs())
                            .fold(0.0, f64::max);
                        if d < best_dist {
                            best_dist = d;
                            best_pt = self.positions[i].iter().map(|&p| point[p]).collect();
                        }
                    }
                }
                for d in (0..counter.len()).rev() {
                    counter[d] += 1;
                    if counter[d] < ns[d] {
                        continue 'grid;
                    }
                    counter[d] = 0;
                }
                break;
            }
            if best_pt.is_empty() {
                return None;
            }
            worst = worst.max(best_dist);
            for (d, &pos) in self.positions[i].iter().enumerate() {
                x_prime[pos] = best_pt[d];
            }
        }
        Some((x_prime, worst))
    }
}

impl ImageEnclosure for BestResponseMap {
    fn domain(&self) -> &BoxN {
        &self.domain
    }

    fn image(&self, y: &BoxN) -> Result<Vec<BoxN>, MapError> {
        let Some(y) = self.domain.intersect(y)? else {
            return Ok(Vec::new());
        };
        let mut parts = Vec::with_capacity(self.players.len());
        for i in 0..self.players.len() {
            let (param, param_positions) = self.opponent_block(i, &y);
            let leaves = argmin_core(
                &self.objectives[i],
                &self.players[i].domain,
                &self.positions[i],
                Some((&param, param_positions.as_slice())),
                self.cfg.depth,
            )
            .map_err(MapError::Eval)?;
            parts.push(condense(leaves, 16));
        }
        let count: usize = parts.iter().map(Vec::len).product();
        if count > 256 {
            for part in &mut parts {
                *part = condense(std::mem::take(part), 1);
            }
        }
        Ok(cross_product(&parts))
    }
}

impl PointResidualOracle for BestResponseMap {
    fn residual(&self, x: &[f64]) -> f64 {
        self.sampled_best_response(x)
            .map_or(f64::INFINITY, |(_, r)| r)
    }
}

/// Build the best-response map and pave its fixed points over the full
/// strategy domain.
pub fn solve_equilibrium(
    spec: &GameSpec,
    search: &ArgoptConfig,
    pave_cfg: &PaveConfig,
) -> Result<(BestResponseMap, Paving), GameError> {
    let map = BestResponseMap::new(spec, search)?;
    let paving = enclose_fixed_points(&map, &map.domain.clone(), pave_cfg)?;
    Ok((map, paving))
}

/// Outcome of probing a paving for a strategy profile together with a
/// nearby best response to it.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub enum CournotOutcome {
    Found { x: Vec<f64>, x_prime: Vec<f64> },
    NotFound,
}

/// Probe each candidate box (center, then corners) for a profile whose
/// sampled best-response distance is at most `delta` and whose sampled best
/// response lands inside some candidate box inflated by `delta`.
pub fn cournot_pair_test(
    map: &BestResponseMap,
    paving: &Paving,
    delta: f64,
) -> CournotOutcome {
    for b in &paving.candidates {
        let mut probes = vec![b.midpoint()];
        if b.dim() <= 24 {
            probes.extend(b.corners());
        }
        for p in probes {
            if let Some((x_prime, r)) = map.sampled_best_response(&p) {
                if r <= delta
                    && paving
                        .candidates
                        .iter()
                        .any(|c| c.inflate(delta).contains_point(&x_prime))
                {
                    return CournotOutcome::Found { x: p, x_prime };
                }
            }
        }
    }
    CournotOutcome::NotFound
}

/// Lower and upper values of a two-player zero-sum game: `max_min` is the
/// best the maximizer can guarantee, `min_max` the best the minimizer can
/// cap; each is within `tol` of the true value, and `gap = min_max -
/// max_min` vanishes exactly when the game has a saddle value.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct MinimaxGap {
    pub max_min: f64,
    pub min_max: f64,
    pub gap: f64,
}

struct OuterNode {
    leaf: BoxN,
    mlo: f64,
    mhi: f64,
    splittable: bool,
}

/// Bracket `sup` of `e` over the inner box, uniformly for every point of
/// `outer_leaf`: the true supremum at each such point lies inside the
/// returned interval.
fn inner_sup_bracket(
    e: &Expr,
    outer_leaf: &BoxN,
    outer_positions: &[usize],
    inner: &BoxN,
    inner_positions: &[usize],
    tol: f64,
    buf: &mut [Interval],
) -> Result<(f64, f64), EvalError> {
    fill_slots(buf, outer_leaf, outer_positions);
    fill_slots(buf, inner, inner_positions);
    let v = e.eval_interval(buf)?;
    let mut leaves: Vec<(BoxN, f64, f64)> = vec![(inner.clone(), v.lo(), v.hi())];
    let mut last_gap = f64::INFINITY;
    let mut stalled = 0;
    for _ in 0..2000 {
        let mut lb = f64::NEG_INFINITY;
        let mut ub = f64::NEG_INFINITY;
        let mut top = 0;
        for (k, (_, lo, hi)) in leaves.iter().enumerate() {
            lb = lb.max(*lo);
            if *hi > ub {
                ub = *hi;
                top = k;
            }
        }
        if ub - lb <= tol || leaves[top].0.diameter() <= 1e-12 {
            return Ok((lb, ub));
        }
        if ub - lb < last_gap {
            last_gap = ub - lb;
            stalled = 0;
        } else {
            stalled += 1;
            if stalled >= 64 {
                return Ok((lb, ub));
            }
        }
        let (leaf, _, _) = leaves.swap_remove(top);
        let (l, r) = leaf.bisect()?;
        if l == leaf || r == leaf {
            return Ok((lb, ub));
        }
        for half in [l, r] {
            fill_slots(buf, &half, inner_positions);
            let v = e.eval_interval(buf)?;
            leaves.push((half, v.lo(), v.hi()));
        }
        leaves.retain(|(_, _, hi)| *hi >= lb);
    }
    let lb = leaves.iter().fold(f64::NEG_INFINITY, |a, (_, lo, _)| a.max(*lo));
    let ub = leaves.iter().fold(f64::NEG_INFINITY, |a, (_, _, hi)| a.max(*hi));
    Ok((lb, ub))
}

/// Minimize, over the outer box, the supremum of `e` over the inner box,
/// to within `tol`.
fn min_of_inner_sup(
    e: &Expr,
    outer: &BoxN,
    outer_positions: &[usize],
    inner: &BoxN,
    inner_positions: &[usize],
    tol: f64,
) -> Result<f64, GameError> {
    let inner_tol = tol * 0.25;
    let mut buf = vec![Interval::point(0.0).unwrap(); e.vars().len()];
    let (mlo, mhi) = inner_sup_bracket(
        e,
        outer,
        outer_positions,
        inner,
        inner_positions,
        inner_tol,
        &mut buf,
    )?;
    let mut nodes = vec![OuterNode {
        leaf: outer.clone(),
        mlo,
        mhi,
        splittable: outer.diameter() > 0.0,
    }];
    let mut gap = f64::INFINITY;
    for _ in 0..20_000 {
        let best_ub = nodes.iter().map(|n| n.mhi).fold(f64::INFINITY, f64::min);
        nodes.retain(|n| n.mlo <= best_ub);
        let min_lo = nodes.iter().map(|n| n.mlo).fold(f64::INFINITY, f64::min);
        gap = best_ub - min_lo;
        if gap <= tol {
            return Ok(min_lo + gap / 2.0);
        }
        let mut pick: Option<usize> = None;
        for (k, n) in nodes.iter().enumerate() {
            if n.splittable && pick.is_none_or(|p| n.mlo < nodes[p].mlo) {
                pick = Some(k);
            }
        }
        let Some(pick) = pick else { break };
        let node = nodes.remove(pick);
        let (l, r) = node.leaf.bisect()?;
        if l == node.leaf || r == node.leaf {
            nodes.push(OuterNode {
                splittable: false,
                ..node
            });
            continue;
        }
        for half in [l, r] {
            let (lo, hi) = inner_sup_bracket(
                e,
                &half,
                outer_positions,
                inner,
                inner_positions,
                inner_tol,
                &mut buf,
            )?;
            nodes.push(OuterNode {
                splittable: half.diameter() > 0.0,
                leaf: half,
                mlo: lo.max(node.mlo),
                mhi: hi.min(node.mhi),
            });
        }
    }
    Err(GameError::ToleranceNotReached {
        requested: tol,
        achieved: gap,
    })
}

/// Lower and upper game values of a saddle game, each within `tol`.
pub fn minimax_gap(spec: &GameSpec, tol: f64) -> Result<MinimaxGap, GameError> {
    if spec.mode != GameMode::Saddle {
        return Err(GameError::InvalidGame(
            "game values are defined for saddle games".into(),
        ));
    }
    if !(tol > 0.0 && tol.is_finite()) {
        return Err(GameError::InvalidConfig(format!(
            "tol must be positive and finite, got {tol}"
        )));
    }
    let payoff = &spec.payoffs[0];
    let u_box = &spec.players[0].domain;
    let v_box = &spec.players[1].domain;
    let u_pos: Vec<usize> = spec.positions[0].clone();
    let v_pos: Vec<usize> = spec.positions[1].clone();
    let min_max = min_of_inner_sup(payoff, u_box, &u_pos, v_box, &v_pos, tol)?;
    let negated = payoff.negated();
    let max_min = -min_of_inner_sup(&negated, v_box, &v_pos, u_box, &u_pos, tol)?;
    Ok(MinimaxGap {
        max_min,
        min_max,
        gap: min_max - max_min,
    })
}
