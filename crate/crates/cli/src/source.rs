//! Turning command-line arguments into polynomials, families and towers.

use iwalink_core::catalog::{
    bailey_even_family, bezout_certificate, bezout_link, c4_link, conway_two_bridge, figure1_link,
    hosokawa_family, knot_family, LinkFamily,
};
use iwalink_core::covers::{CoverSpec, CoverTower};
use iwalink_core::expr::parse_poly;
use iwalink_core::{MultiLaurent, Prime, UniPoly};

use crate::{CliError, SourceArgs, TowerArgs};

pub const FAMILIES: &[(&str, &str, &str)] = &[
    ("figure1", "--m (default 1)", "m (t1-1)(t2-1)^3, linking number 0"),
    ("conway", "--a --b", "2-bridge link C(2a, 2b, -2a)"),
    ("c4", "", "2-bridge link C(4), t1 t2 + 1"),
    ("hosokawa", "--r --ell (0) --m (0) --p", "reduced polynomial p^m (t-1)^(r-1+2 ell) at z = (1, ..., 1)"),
    ("bailey", "--ell --m (0)", "2^m (t1-1)(t2-1)(t1 t2 + 1/(t1 t2))^max(0, ell-2), p = 2"),
    ("bezout", "--m --s (0)", "link with linking number 2^(m+1) from the Bezout certificate, p = 2"),
    ("knot", "--delta", "one-component link with Alexander polynomial --delta in t"),
];

fn usage(msg: impl Into<String>) -> CliError {
    CliError::Usage(msg.into())
}

/// Parses an expression, reporting syntax errors with a caret under the
/// offending byte.
pub fn parse_expr(src: &str, arity: usize) -> Result<MultiLaurent, CliError> {
    parse_poly(src, arity).map_err(|e| {
        let pad = " ".repeat(e.offset());
        usage(format!("cannot parse {src:?}: {e}\n  {src}\n  {pad}^"))
    })
}

pub fn parse_knot_poly(src: &str) -> Result<UniPoly, CliError> {
    let f = parse_expr(src, 1)?;
    Ok(f.specialize(&[1])?.poly)
}

fn need<T: Copy>(value: Option<T>, flag: &str, family: &str) -> Result<T, CliError> {
    value.ok_or_else(|| usage(format!("family {family} needs {flag}")))
}

fn small(value: u64, flag: &str) -> Result<u32, CliError> {
    u32::try_from(value).map_err(|_| usage(format!("{flag} is too large")))
}

pub fn prime(args: &SourceArgs) -> Result<Prime, CliError> {
    let p = args.p.ok_or_else(|| usage("missing --p"))?;
    Ok(Prime::new(p)?)
}

pub fn family(args: &SourceArgs) -> Result<LinkFamily, CliError> {
    let name = args.family.as_deref().ok_or_else(|| usage("missing --family"))?;
    if args.delta.is_some() && name != "knot" {
        return Err(usage("--delta and --family are exclusive except for --family knot"));
    }
    let fam = match name {
        "figure1" => figure1_link(args.m.unwrap_or(1))?,
        "conway" => conway_two_bridge(need(args.a, "--a", name)?, need(args.b, "--b", name)?)?,
        "c4" => c4_link(),
        "hosokawa" => {
            let r = small(need(args.r, "--r", name)? as u64, "--r")?;
            let m = small(args.m.unwrap_or(0), "--m")?;
            hosokawa_family(r, args.ell.unwrap_or(0), m, prime(args)?)?
        }
        "bailey" => bailey_even_family(need(args.ell, "--ell", name)?, small(args.m.unwrap_or(0), "--m")?)?,
        "bezout" => {
            let cert = bezout_certificate(small(need(args.m, "--m", name)?, "--m")?)?;
            bezout_link(&cert, args.s.unwrap_or(0))?
        }
        "knot" => {
            let src = args.delta.as_deref().ok_or_else(|| usage("family knot needs --delta"))?;
            knot_family(&parse_knot_poly(src)?)?
        }
        other => {
            let names: Vec<&str> = FAMILIES.iter().map(|f| f.0).collect();
            return Err(usage(format!("unknown family {other:?}; expected one of {}", names.join(", "))));
        }
    };
    Ok(fam)
}

/// An explicit polynomial or a family, whichever was given.
pub enum Source {
    Delta(MultiLaurent),
    Family(LinkFamily),
}

impl Source {
    pub fn from_args(args: &SourceArgs) -> Result<Self, CliError> {
        match (&args.delta, &args.family) {
            (_, Some(_)) => Ok(Source::Family(family(args)?)),
            (Some(src), None) => {
                let r = args.r.ok_or_else(|| usage("--delta needs --r"))?;
                Ok(Source::Delta(parse_expr(src, r)?))
            }
            (None, None) => Err(usage("give --delta with --r, or --family")),
        }
    }

    pub fn link_delta(&self) -> Option<&MultiLaurent> {
        match self {
            Source::Delta(d) => Some(d),
            Source::Family(f) => f.link_delta(),
        }
    }

    fn components(&self) -> usize {
        match self {
            Source::Delta(d) => d.nvars(),
            Source::Family(f) => f.components(),
        }
    }

    fn default_z(&self) -> Vec<i64> {
        match self {
            Source::Family(LinkFamily {
                recommended_z: Some(z),
                ..
            }) => z.clone(),
            _ => vec![1; self.components()],
        }
    }
}

pub fn tower(args: &TowerArgs) -> Result<CoverTower, CliError> {
    let source = Source::from_args(&args.source)?;
    let p = prime(&args.source)?;
    let z = args.z.clone().unwrap_or_else(|| source.default_z());
    let knot_polys = args
        .knot_polys
        .as_deref()
        .map(|s| s.split(';').map(parse_knot_poly).collect::<Result<Vec<_>, _>>())
        .transpose()?;
    match (source.link_delta(), &source) {
        (Some(delta), _) => {
            let mut spec = CoverSpec::new(delta.clone(), z, p)?;
            if let Some(polys) = knot_polys {
                spec = spec.with_component_knot_polys(polys)?;
            }
            Ok(CoverTower::from_spec(&spec)?)
        }
        (None, Source::Family(fam)) => {
            if knot_polys.is_some() {
                return Err(usage(format!("--knot-polys does not apply to family {}", fam.kind.name())));
            }
            Ok(fam.tower(&z, p)?)
        }
        (None, Source::Delta(_)) => unreachable!("explicit polynomials always have a link polynomial"),
    }
}
