use std::path::Path;

use csrbf::experiments::{self, SweepAxis};
use csrbf::gas::{solve, GasProblem, SolutionReport};
use csrbf::{reference, CenterSet, Error, Execution, Interpolant, ScaledKernel};

use crate::table::{Cell, Table};

pub enum Output {
    Report(SolutionReport),
    Table(Table),
}

/// Failure of a subcommand, split by exit status.
#[derive(Debug)]
pub enum Failure {
    Usage(String),
    Numerical(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Config(_) | Error::Dimension { .. } | Error::UndefinedReconstruction => {
                Failure::Usage(e.to_string())
            }
            _ => Failure::Numerical(e.to_string()),
        }
    }
}

pub fn solve_cmd(problem: &GasProblem) -> Result<Output, Failure> {
    let sol = solve(problem)?;
    Ok(Output::Report(sol.report()?))
}

pub fn report_table(r: &SolutionReport) -> Table {
    let mut t = Table::new(["quantity", "value"]);
    t.push(vec!["kernel".into(), r.kernel.to_string().into()]);
    t.push(vec!["r_omega".into(), r.r_omega.into()]);
    t.push(vec!["alpha".into(), r.alpha.into()]);
    t.push(vec!["n".into(), r.n.into()]);
    t.push(vec!["rho".into(), r.rho.into()]);
    t.push(vec!["l_inf".into(), r.l_inf.into()]);
    t.push(vec!["y_defined".into(), r.y_defined.into()]);
    t.push(vec!["y_prime_0".into(), r.y_prime_0.into()]);
    t.push(vec!["res_norm_sq".into(), r.res_norm_sq.into()]);
    t.push(vec!["condition_number".into(), r.condition_number.into()]);
    t.push(vec!["zero_percent".into(), r.zero_percent.into()]);
    t.push(vec!["iterations".into(), r.iterations.into()]);
    for s in &r.y_samples {
        t.push(vec![format!("y({})", s.x).into(), s.y.into()]);
    }
    t
}

pub fn table_cmd(which: u8, base: &GasProblem, exec: Execution) -> Result<Output, Failure> {
    let table = match which {
        5 => profile_columns(base, exec),
        6 => slope_rows(base, exec),
        7 => slope_by_alpha(base, exec),
        8 => diagnostics(base, exec)?,
        _ => return Err(Failure::Usage(format!("no table {which}; expected 5, 6, 7 or 8"))),
    };
    Ok(Output::Table(table))
}

fn profile_columns(base: &GasProblem, exec: Execution) -> Table {
    let pt = experiments::profile_table(base, exec);
    let mut headers = vec!["x".to_string()];
    for c in &pt.columns {
        let name = c.kernel.family().to_string();
        headers.push(name.clone());
        headers.push(format!("{name} ref"));
    }
    let mut t = Table::new(headers);
    for (i, &x) in pt.x.iter().enumerate() {
        let mut row = vec![Cell::Num(x)];
        for (k, c) in pt.columns.iter().enumerate() {
            row.push(c.result.as_ref().map(|v| v.y[i]).into());
            row.push(reference::PROFILE_Y[i][k].into());
        }
        t.push(row);
    }
    t
}

fn slope_rows(base: &GasProblem, exec: Execution) -> Table {
    let pt = experiments::profile_table(base, exec);
    let mut t = Table::new([
        "kernel",
        "r_omega",
        "y_prime_0",
        "y_prime_0 ref",
        "res_norm_sq",
        "res_norm_sq ref",
    ]);
    for (k, c) in pt.columns.iter().enumerate() {
        let r = c.result.as_ref();
        t.push(vec![
            c.kernel.family().to_string().into(),
            c.kernel.r_omega().into(),
            r.map(|v| v.y_prime_0).into(),
            reference::INITIAL_SLOPE[k].into(),
            r.map(|v| v.res_norm_sq).into(),
            reference::RES_NORM_SQ[k].into(),
        ]);
    }
    t
}

fn slope_by_alpha(base: &GasProblem, exec: Execution) -> Table {
    let mut t = Table::new(["alpha", "kernel", "r_omega", "n", "y_prime_0", "y_prime_0 ref"]);
    for cell in experiments::slope_table(base, exec) {
        t.push(vec![
            cell.alpha.into(),
            cell.kernel.family().to_string().into(),
            cell.kernel.r_omega().into(),
            cell.n.into(),
            cell.y_prime_0.into(),
            cell.reference.into(),
        ]);
    }
    t
}

fn diagnostics(base: &GasProblem, exec: Execution) -> Result<Table, Failure> {
    let rows = experiments::diagnostic_table(base, &reference::DIAGNOSTIC_RADII, exec)?;
    let mut headers = vec!["r_omega", "zero_percent", "zero_percent ref"]
        .into_iter()
        .map(String::from)
        .collect::<Vec<_>>();
    for k in experiments::standard_kernels() {
        let name = k.family().to_string();
        headers.push(format!("cond {name}"));
        headers.push(format!("cond {name} ref"));
    }
    let mut t = Table::new(headers);
    for (i, row) in rows.iter().enumerate() {
        let mut cells = vec![
            row.r_omega.into(),
            row.zero_percent.into(),
            reference::ZERO_PERCENT[i].into(),
        ];
        for (k, &c) in row.condition_numbers.iter().enumerate() {
            cells.push(c.into());
            cells.push(reference::CONDITION_NUMBER[i][k].into());
        }
        t.push(cells);
    }
    Ok(t)
}

pub fn sweep_cmd(
    base: &GasProblem,
    axis: SweepAxis,
    grid: &[f64],
    exec: Execution,
) -> Result<Output, Failure> {
    if grid.is_empty() {
        return Err(Failure::Usage("sweep grid is empty".into()));
    }
    if grid.windows(2).any(|w| w[1] <= w[0]) {
        return Err(Failure::Usage("sweep grid must be strictly increasing".into()));
    }
    let axis_name = match axis {
        SweepAxis::Rw => "r_omega",
        SweepAxis::Rho => "rho",
        SweepAxis::N => "n",
    };
    let mut t = Table::new([
        axis_name,
        "res_norm_sq",
        "condition_number",
        "zero_percent",
        "converged",
        "y_prime_0",
        "iterations",
    ]);
    for row in experiments::sweep(base, axis, grid, exec) {
        let solved = row.solve.as_ref();
        let slope: Cell = match solved {
            Ok(s) => s.y_prime_0.into(),
            Err(_) => Cell::Fail,
        };
        let value = match axis {
            SweepAxis::N if row.value.fract() == 0.0 => Cell::Int(row.value as i64),
            _ => Cell::Num(row.value),
        };
        t.push(vec![
            value,
            solved.map(|s| s.res_norm_sq).into(),
            row.condition_number.map(Cell::Num).unwrap_or(Cell::Fail),
            row.zero_percent.map(Cell::Num).unwrap_or(Cell::Fail),
            row.converged().into(),
            slope,
            solved.map(|s| s.iterations).into(),
        ]);
    }
    Ok(Output::Table(t))
}

pub fn profile_cmd(problem: &GasProblem, points: usize) -> Result<Output, Failure> {
    if points < 2 {
        return Err(Failure::Usage("profile needs at least 2 points".into()));
    }
    let sol = solve(problem)?;
    let mut t = Table::new(["x", "y"]);
    for (x, y) in sol.profile(points)? {
        t.push(vec![x.into(), y.into()]);
    }
    Ok(Output::Table(t))
}

pub fn interp_cmd(
    input: &Path,
    kernel: ScaledKernel,
    grid: Option<&[f64]>,
    points: usize,
) -> Result<Output, Failure> {
    let (xs, ys) = read_pairs(input)?;
    let order: Vec<usize> = {
        let mut idx: Vec<usize> = (0..xs.len()).collect();
        idx.sort_by(|&a, &b| xs[a].total_cmp(&xs[b]));
        idx
    };
    let sorted_x: Vec<f64> = order.iter().map(|&i| xs[i]).collect();
    let sorted_y: Vec<f64> = order.iter().map(|&i| ys[i]).collect();
    let centers = CenterSet::new(sorted_x.clone())?;
    let interp = Interpolant::fit(centers, &sorted_y, kernel)?;

    let eval: Vec<f64> = match grid {
        Some(g) => g.to_vec(),
        None => {
            if points < 2 {
                return Err(Failure::Usage("interp needs at least 2 points".into()));
            }
            let (lo, hi) = (sorted_x[0], sorted_x[sorted_x.len() - 1]);
            let last = (points - 1) as f64;
            (0..points)
                .map(|i| {
                    if i + 1 == points {
                        hi
                    } else {
                        lo + (hi - lo) * i as f64 / last
                    }
                })
                .collect()
        }
    };
    let mut t = Table::new(["x", "y_n"]);
    for x in eval {
        t.push(vec![x.into(), interp.evaluate(x).into()]);
    }
    Ok(Output::Table(t))
}

/// Reads `x,y` pairs; a leading non-numeric row is taken as a header.
fn read_pairs(path: &Path) -> Result<(Vec<f64>, Vec<f64>), Failure> {
    let mut rdr = csv::ReaderBuilder::new()
        .has_headers(false)
        .trim(csv::Trim::All)
        .comment(Some(b'#'))
        .from_path(path)
        .map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?;
    let (mut xs, mut ys) = (Vec::new(), Vec::new());
    for (i, rec) in rdr.records().enumerate() {
        let rec = rec.map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?;
        if rec.len() < 2 {
            return Err(Failure::Usage(format!("line {}: expected x,y", i + 1)));
        }
        match (rec[0].parse::<f64>(), rec[1].parse::<f64>()) {
            (Ok(x), Ok(y)) => {
                xs.push(x);
                ys.push(y);
            }
            _ if i == 0 => continue,
            _ => return Err(Failure::Usage(format!("line {}: expected x,y", i + 1))),
        }
    }
    if xs.is_empty() {
        return Err(Failure::Usage(format!("{}: no data rows", path.display())));
    }
    Ok((xs, ys))
}
