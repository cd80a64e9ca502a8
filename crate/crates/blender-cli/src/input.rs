//! Input plumbing: builtin families, exact rational parameters, and form
//! loading from JSON files or stdin.

use anyhow::{anyhow, bail, Context, Result};
use blender_core::forms::json::{form_from_json, tower_form_from_json};
use blender_core::forms::{QForm, TForm};
use blender_core::rat::{parse_rat, Rat};
use blender_core::waring::EvenSymmetricOctic;
use std::collections::BTreeMap;
use std::io::Read;

/// Parsed `k=v` family parameters with exact rational values.
pub struct Params(BTreeMap<String, Rat>);

impl Params {
    pub fn parse(raw: &[String]) -> Result<Params> {
        let mut map = BTreeMap::new();
        for item in raw {
            let (k, v) = item
                .split_once('=')
                .ok_or_else(|| anyhow!("family parameter `{}` is not of the form k=v", item))?;
            let q = parse_rat(v)
                .ok_or_else(|| anyhow!("parameter `{}`: `{}` is not an exact rational", k, v))?;
            map.insert(k.trim().to_string(), q);
        }
        Ok(Params(map))
    }

    pub fn get(&self, key: &str) -> Result<&Rat> {
        self.0
            .get(key)
            .ok_or_else(|| anyhow!("family parameter `{}` is required", key))
    }

    pub fn get_u32(&self, key: &str) -> Result<u32> {
        let q = self.get(key)?;
        if !q.is_integer() {
            bail!("parameter `{}` must be a non-negative integer, got {}", key, q);
        }
        u32::try_from(q.to_integer()).map_err(|_| anyhow!("parameter `{}` out of range", key))
    }
}

/// A fully-resolved input form, rational when possible.
pub enum LoadedForm {
    Rational(QForm),
    Tower(TForm),
}

impl LoadedForm {
    pub fn rational(&self) -> Result<&QForm> {
        match self {
            LoadedForm::Rational(p) => Ok(p),
            LoadedForm::Tower(_) => bail!("this operation needs rational coefficients"),
        }
    }

    pub fn to_tower(&self) -> TForm {
        match self {
            LoadedForm::Rational(p) => p.to_tower(),
            LoadedForm::Tower(p) => p.clone(),
        }
    }
}

/// Reads a form from a JSON file (`-` for stdin); rational coefficients
/// demote exactly.
pub fn load_form(path: &str) -> Result<LoadedForm> {
    let text = if path == "-" {
        let mut buf = String::new();
        std::io::stdin().read_to_string(&mut buf).context("reading stdin")?;
        buf
    } else {
        std::fs::read_to_string(path).with_context(|| format!("reading {}", path))?
    };
    if let Ok(p) = form_from_json(&text) {
        return Ok(LoadedForm::Rational(p));
    }
    let tower = tower_form_from_json(&text).map_err(|e| anyhow!("malformed form JSON: {}", e))?;
    Ok(match tower.try_to_rational() {
        Some(p) => LoadedForm::Rational(p),
        None => LoadedForm::Tower(tower),
    })
}

/// Builds one of the named form families with exact parameters.
pub fn build_family(name: &str, params: &Params) -> Result<LoadedForm> {
    let p = match name {
        "flam" => blender_core::quartics::flam(params.get("lambda")?),
        "glam" => blender_core::quartics::glam(params.get("lambda")?),
        "qlam" => blender_core::convexity::qlam(params.get("lambda")?),
        "hrk" => blender_core::convexity::hrk_family(params.get_u32("r")?, params.get_u32("k")?)
            .map_err(|e| anyhow!("{}", e))?,
        "psi" => blender_core::waring::psi_octic(params.get("lambda")?).expand(),
        "omega" => blender_core::waring::omega_octic(params.get("alpha")?).to_form(),
        "trinomial" => {
            let r = params.get_u32("r")?;
            if let (Ok(b), Ok(c)) = (params.get("b"), params.get("c")) {
                let k = params.get_u32("k")?;
                blender_core::convexity::trinomial_form(r, k, params.get("a")?, b, c)
                    .map_err(|e| anyhow!("{}", e))?
            } else {
                blender_core::convexity::ring_trinomial(r, params.get("a")?)
            }
        }
        "eso" => {
            let e = EvenSymmetricOctic::new(
                params.get("A")?.clone(),
                params.get("B")?.clone(),
                params.get("C")?.clone(),
            );
            e.expand()
        }
        other => bail!("unknown family `{}`", other),
    };
    Ok(LoadedForm::Rational(p))
}

/// Extracts the even-symmetric-octic coordinates of a rational form.
pub fn as_even_symmetric_octic(p: &QForm) -> Result<EvenSymmetricOctic> {
    if p.nvars() != 2 || p.degree() != 8 {
        bail!("expected a binary octic");
    }
    let a = p.raw_coeff(&[8, 0]);
    let b = p.raw_coeff(&[6, 2]);
    let c = p.raw_coeff(&[4, 4]);
    let candidate = EvenSymmetricOctic::new(a, b, c);
    if &candidate.expand() != p {
        bail!("form is not an even symmetric octic");
    }
    Ok(candidate)
}

pub fn parse_point(s: &str) -> Result<Vec<Rat>> {
    s.split(',')
        .map(|x| parse_rat(x).ok_or_else(|| anyhow!("`{}` is not an exact rational", x)))
        .collect()
}

pub fn parse_matrix(s: &str) -> Result<Vec<Vec<Rat>>> {
    s.split(';')
        .map(|row| {
            row.split(',')
                .map(|x| parse_rat(x).ok_or_else(|| anyhow!("`{}` is not an exact rational", x)))
                .collect()
        })
        .collect()
}
