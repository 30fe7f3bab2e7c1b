//! Command-line front end: every algorithm in the library behind one
//! binary, with prose or `--json` output.
//!
//! Exit codes: 0 on success, 1 on domain errors (not representable, bad
//! field, ...), 2 on parse errors (unreadable elements, unknown rings,
//! malformed invocations).

use clap::{Parser, Subcommand};
use contsum::continuants::{continuant, QuotientSeq};
use contsum::euclid::euclidean_algorithm;
use contsum::forms::{
    descent_chain, eisenstein_form, find_star_multiplier, form_x2_3y2, four_squares, sqrt3_form,
    star_multiplier_from_pair, FormKind, FormQuadruple, StarMultiplier,
};
use contsum::ring::text::{format_value, parse_value};
use contsum::ring::RingId;
use contsum::two_squares::{
    cyclotomic_rep, multiplier_from_representation, poly_two_squares, smith_two_squares,
};
use contsum::{Error, Result};
use num_bigint::BigInt;

#[derive(Parser)]
#[command(
    name = "contsum",
    about = "Exact continuant algebra: sums of squares over Euclidean rings",
    version
)]
struct Cli {
    /// Emit one JSON object instead of prose.
    #[arg(long, global = true)]
    json: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Write a prime p = 1 (mod 4) as x^2 + y^2.
    Twosq { p: u64 },
    /// Write a nonnegative integer as a sum of four squares.
    Foursq {
        #[arg(allow_hyphen_values = true)]
        n: String,
    },
    /// Represent n by x^2 - x*y + y^2 + z^2 - z*u + u^2.
    Eisenstein {
        #[arg(allow_hyphen_values = true)]
        n: String,
    },
    /// Represent n by x^2 + 3*y^2 + z^2 + 3*u^2.
    X2p3y2 {
        #[arg(allow_hyphen_values = true)]
        n: String,
    },
    /// Represent a nonzero n by x^2 - 3*y^2 + z^2 - 3*u^2.
    Sqrt3 {
        #[arg(allow_hyphen_values = true)]
        n: String,
    },
    /// Split a polynomial m dividing z^2 + 1 into unit * (x^2 + y^2).
    Polytwosq {
        /// Coefficient field: Q, or F:p with p = 3 (mod 4).
        #[arg(long)]
        field: String,
        #[arg(allow_hyphen_values = true)]
        m: String,
        /// A multiplier with m | z^2 + 1; required (the tool does not
        /// search for one).
        #[arg(allow_hyphen_values = true)]
        z: Option<String>,
    },
    /// The two-squares identity for the cyclotomic polynomial Phi_4p.
    Cyclotomic { p: u64 },
    /// Evaluate the continuant of a quotient sequence.
    Continuant {
        #[arg(long)]
        ring: String,
        #[arg(required = true, allow_hyphen_values = true)]
        elements: Vec<String>,
    },
    /// Run the Euclidean algorithm; print the gcd and the quotients.
    Euclid {
        #[arg(long)]
        ring: String,
        #[arg(allow_hyphen_values = true)]
        a: String,
        #[arg(allow_hyphen_values = true)]
        b: String,
    },
    /// From a representation pair (x, y), recover the multiplier z with
    /// z^2 + 1 = (x^2 + y^2) * w (trivial involution) or with
    /// x*conj(x) + y*conj(y) dividing z*conj(z) + 1 (star rings).
    Multiplier {
        #[arg(long)]
        ring: String,
        #[arg(allow_hyphen_values = true)]
        x: String,
        #[arg(allow_hyphen_values = true)]
        y: String,
    },
    /// Check a claimed quadruple against its form and target value.
    Verify {
        /// One of: foursq, eisenstein, x2p3y2, sqrt3.
        form: String,
        #[arg(allow_hyphen_values = true)]
        n: String,
        #[arg(allow_hyphen_values = true)]
        x: String,
        #[arg(allow_hyphen_values = true)]
        y: String,
        #[arg(allow_hyphen_values = true)]
        z: String,
        #[arg(allow_hyphen_values = true)]
        u: String,
    },
}

/// Everything one invocation reports, in both output modes.
struct Report {
    input: String,
    form: &'static str,
    human: String,
    components: Vec<String>,
    unit: String,
    chain: Option<Vec<String>>,
    quotients: Option<Vec<String>>,
}

impl Report {
    fn print(&self, json: bool) {
        if !json {
            println!("{}", self.human);
            return;
        }
        let mut map = serde_json::Map::new();
        map.insert("input".into(), self.input.clone().into());
        map.insert("form".into(), self.form.into());
        map.insert("components".into(), self.components.clone().into());
        map.insert("unit".into(), self.unit.clone().into());
        if let Some(chain) = &self.chain {
            map.insert("chain".into(), chain.clone().into());
        }
        if let Some(quotients) = &self.quotients {
            map.insert("quotients".into(), quotients.clone().into());
        }
        println!("{}", serde_json::Value::Object(map));
    }
}

fn main() {
    let cli = Cli::parse();
    match run(&cli.command) {
        Ok(report) => {
            report.print(cli.json);
        }
        Err(e) => {
            eprintln!("{e}");
            let code = match e {
                Error::ParseError { .. } => 2,
                _ => 1,
            };
            std::process::exit(code);
        }
    }
}

fn run(command: &Command) -> Result<Report> {
    match command {
        Command::Twosq { p } => twosq(*p),
        Command::Foursq { n } => quadruple_form(n, "foursq"),
        Command::Eisenstein { n } => quadruple_form(n, "eisenstein"),
        Command::X2p3y2 { n } => quadruple_form(n, "x2p3y2"),
        Command::Sqrt3 { n } => quadruple_form(n, "sqrt3"),
        Command::Polytwosq { field, m, z } => polytwosq(field, m, z.as_deref()),
        Command::Cyclotomic { p } => cyclotomic(*p),
        Command::Continuant { ring, elements } => continuant_cmd(ring, elements),
        Command::Euclid { ring, a, b } => euclid_cmd(ring, a, b),
        Command::Multiplier { ring, x, y } => multiplier_cmd(ring, x, y),
        Command::Verify { form, n, x, y, z, u } => verify_cmd(form, n, &[x, y, z, u]),
    }
}

// ---------------------------------------------------------------------
// argument parsing helpers
// ---------------------------------------------------------------------

fn parse_int(text: &str) -> Result<BigInt> {
    text.parse::<BigInt>().map_err(|_| Error::ParseError {
        position: 0,
        message: format!("expected an integer, got {text:?}"),
    })
}

fn parse_ring(token: &str) -> Result<RingId> {
    match token {
        "Z" => Ok(RingId::Integers),
        "Q" => Ok(RingId::Rationals),
        "Z[i]" => Ok(RingId::GaussianIntegers),
        "Z[w]" => Ok(RingId::EisensteinIntegers),
        "Z[s]" => Ok(RingId::ZSqrt3),
        "M2" => Ok(RingId::IntMatrix2),
        other => {
            if let Some(base) = other.strip_suffix("[X]") {
                return RingId::poly_over(parse_ring(base)?).map_err(|e| Error::ParseError {
                    position: 0,
                    message: format!("bad polynomial ring {other:?}: {e}"),
                });
            }
            if let Some(digits) = other.strip_prefix("F:") {
                let p: u64 = digits.parse().map_err(|_| Error::ParseError {
                    position: 2,
                    message: format!("expected a prime after F:, got {digits:?}"),
                })?;
                return RingId::prime_field(p).map_err(|e| Error::ParseError {
                    position: 2,
                    message: format!("bad prime field {other:?}: {e}"),
                });
            }
            Err(Error::ParseError {
                position: 0,
                message: format!(
                    "unknown ring {other:?} (expected Z, Q, F:p, Z[i], Z[w], Z[s], M2, \
                     Q[X] or F:p[X])"
                ),
            })
        }
    }
}

// ---------------------------------------------------------------------
// the quadruple forms (foursq, eisenstein, x2p3y2, sqrt3)
// ---------------------------------------------------------------------

fn form_token_to_kind(token: &str) -> Result<FormKind> {
    match token {
        "foursq" => Ok(FormKind::FourSquares),
        "eisenstein" => Ok(FormKind::EisensteinDouble),
        "x2p3y2" => Ok(FormKind::X2p3Y2),
        "sqrt3" => Ok(FormKind::Sqrt3Double),
        other => Err(Error::ParseError {
            position: 0,
            message: format!(
                "unknown form {other:?} (expected foursq, eisenstein, x2p3y2 or sqrt3)"
            ),
        }),
    }
}

fn quadruple_human(n: &BigInt, quad: &FormQuadruple) -> String {
    let (x, y, z, u) = &quad.values;
    match quad.form {
        FormKind::FourSquares => format!("{n} = {x}^2 + {y}^2 + {z}^2 + {u}^2"),
        FormKind::EisensteinDouble => {
            format!("{n} = ({x}^2 - {x}*{y} + {y}^2) + ({z}^2 - {z}*{u} + {u}^2)")
        }
        FormKind::X2p3Y2 => format!("{n} = ({x}^2 + 3*{y}^2) + ({z}^2 + 3*{u}^2)"),
        FormKind::Sqrt3Double => format!("{n} = ({x}^2 - 3*{y}^2) + ({z}^2 - 3*{u}^2)"),
    }
}

/// The descent ring whose chain backs each form.
fn form_descent_ring(kind: FormKind) -> RingId {
    match kind {
        FormKind::FourSquares => RingId::GaussianIntegers,
        FormKind::EisensteinDouble | FormKind::X2p3Y2 => RingId::EisensteinIntegers,
        FormKind::Sqrt3Double => RingId::ZSqrt3,
    }
}

/// Recomputes the descent behind a form output, purely as a debugging
/// aid: the chain of moduli and the quotient sequence, when a star
/// multiplier exists for |n| itself (it always does for the primes the
/// pipelines descend on).
fn descent_extras(n: &BigInt, ring: &RingId) -> (Option<Vec<String>>, Option<Vec<String>>) {
    let m = n.magnitude();
    if *m < 2u32.into() {
        return (None, None);
    }
    let m = BigInt::from(m.clone());
    let Ok(StarMultiplier::Multiplier(z)) = find_star_multiplier(&m, ring) else {
        return (None, None);
    };
    let Ok(chain) = descent_chain(&m, &z) else {
        return (None, None);
    };
    let moduli = chain.moduli().iter().map(|v| v.to_string()).collect();
    let quotients = chain.quotients().iter().map(format_value).collect();
    (Some(moduli), Some(quotients))
}

fn quadruple_form(n_text: &str, token: &'static str) -> Result<Report> {
    let n = parse_int(n_text)?;
    let kind = form_token_to_kind(token)?;
    let quad = match kind {
        FormKind::FourSquares => four_squares(&n)?,
        FormKind::EisensteinDouble => eisenstein_form(&n)?,
        FormKind::X2p3Y2 => form_x2_3y2(&n)?,
        FormKind::Sqrt3Double => sqrt3_form(&n)?,
    };
    let (chain, quotients) = descent_extras(&n, &form_descent_ring(kind));
    let (x, y, z, u) = &quad.values;
    Ok(Report {
        input: n.to_string(),
        form: token,
        human: quadruple_human(&n, &quad),
        components: vec![x.to_string(), y.to_string(), z.to_string(), u.to_string()],
        unit: "1".to_string(),
        chain,
        quotients,
    })
}

// ---------------------------------------------------------------------
// two squares
// ---------------------------------------------------------------------

fn twosq(p: u64) -> Result<Report> {
    let (palindrome, rep) = smith_two_squares(p)?;
    let x = format_value(&rep.x);
    let y = format_value(&rep.y);
    Ok(Report {
        input: p.to_string(),
        form: "twosq",
        human: format!("{p} = {x}^2 + {y}^2"),
        components: vec![x, y],
        unit: format_value(&rep.unit),
        chain: None,
        quotients: Some(palindrome.items().iter().map(format_value).collect()),
    })
}

fn polytwosq(field: &str, m_text: &str, z_text: Option<&str>) -> Result<Report> {
    let base = parse_ring(field)?;
    match base {
        RingId::Rationals | RingId::PrimeField(_) => {}
        other => {
            return Err(Error::ParseError {
                position: 0,
                message: format!("--field must be Q or F:p, got {other}"),
            })
        }
    }
    let ring = RingId::poly_over(base)?;
    let m = parse_value(&ring, m_text)?;
    let Some(z_text) = z_text else {
        return Err(Error::PreconditionFailed(
            "no multiplier given: supply z with m dividing z^2 + 1 \
             (searching for one is out of scope)"
                .to_string(),
        ));
    };
    let z = parse_value(&ring, z_text)?;
    let rep = poly_two_squares(&m, &z)?;
    let x = format_value(&rep.x);
    let y = format_value(&rep.y);
    let unit = format_value(&rep.unit);
    let human = if rep.unit.is_one() {
        format!("m = ({x})^2 + ({y})^2")
    } else {
        format!("m = {unit} * (({x})^2 + ({y})^2)")
    };
    Ok(Report {
        input: format!("{m_text} {z_text}"),
        form: "polytwosq",
        human,
        components: vec![x, y],
        unit,
        chain: None,
        quotients: None,
    })
}

fn cyclotomic(p: u64) -> Result<Report> {
    let (phi, x, y) = cyclotomic_rep(p)?;
    let phi_text = format_value(&phi);
    let x = format_value(&x);
    let y = format_value(&y);
    Ok(Report {
        input: p.to_string(),
        form: "cyclotomic",
        human: format!("Phi_{} = {phi_text} = ({x})^2 + ({y})^2", 4 * p),
        components: vec![x, y],
        unit: "1".to_string(),
        chain: None,
        quotients: None,
    })
}

// ---------------------------------------------------------------------
// ring plumbing commands
// ---------------------------------------------------------------------

fn continuant_cmd(ring_token: &str, elements: &[String]) -> Result<Report> {
    let ring = parse_ring(ring_token)?;
    let items = elements
        .iter()
        .map(|text| parse_value(&ring, text))
        .collect::<Result<Vec<_>>>()?;
    let quotients: Vec<String> = items.iter().map(format_value).collect();
    let seq = QuotientSeq::new(ring, items)?;
    let value = continuant(&seq);
    let rendered = format_value(&value);
    Ok(Report {
        input: elements.join(" "),
        form: "continuant",
        human: format!("continuant = {rendered}"),
        components: vec![rendered],
        unit: "1".to_string(),
        chain: None,
        quotients: Some(quotients),
    })
}

fn euclid_cmd(ring_token: &str, a_text: &str, b_text: &str) -> Result<Report> {
    let ring = parse_ring(ring_token)?;
    let a = parse_value(&ring, a_text)?;
    let b = parse_value(&ring, b_text)?;
    let trace = euclidean_algorithm(&a, &b)?;
    let gcd = format_value(trace.gcd());
    let quotients: Vec<String> = trace.quotients().iter().map(format_value).collect();
    Ok(Report {
        input: format!("{a_text} {b_text}"),
        form: "euclid",
        human: format!("gcd = {gcd}; quotients = [{}]", quotients.join(", ")),
        components: vec![gcd],
        unit: "1".to_string(),
        chain: None,
        quotients: Some(quotients),
    })
}

fn multiplier_cmd(ring_token: &str, x_text: &str, y_text: &str) -> Result<Report> {
    let ring = parse_ring(ring_token)?;
    let x = parse_value(&ring, x_text)?;
    let y = parse_value(&ring, y_text)?;
    let input = format!("{x_text} {y_text}");
    if ring.has_trivial_star() {
        let (z, w) = multiplier_from_representation(&x, &y)?;
        let z = format_value(&z);
        let w = format_value(&w);
        Ok(Report {
            input,
            form: "multiplier",
            human: format!("z = {z}; w = {w}"),
            components: vec![z, w],
            unit: "1".to_string(),
            chain: None,
            quotients: None,
        })
    } else {
        let z = star_multiplier_from_pair(&x, &y)?;
        let z = format_value(&z);
        Ok(Report {
            input,
            form: "multiplier",
            human: format!("z = {z}"),
            components: vec![z],
            unit: "1".to_string(),
            chain: None,
            quotients: None,
        })
    }
}

fn verify_cmd(form: &str, n_text: &str, parts: &[&String; 4]) -> Result<Report> {
    let kind = form_token_to_kind(form)?;
    let n = parse_int(n_text)?;
    let values = (
        parse_int(parts[0])?,
        parse_int(parts[1])?,
        parse_int(parts[2])?,
        parse_int(parts[3])?,
    );
    let quad = FormQuadruple { form: kind, values };
    let got = quad.value();
    if got != n {
        return Err(Error::PreconditionFailed(format!(
            "verification failed: the quadruple evaluates to {got}, not {n}"
        )));
    }
    let (x, y, z, u) = &quad.values;
    Ok(Report {
        input: n.to_string(),
        form: "verify",
        human: format!("verified: {}", quadruple_human(&n, &quad)),
        components: vec![x.to_string(), y.to_string(), z.to_string(), u.to_string()],
        unit: "1".to_string(),
        chain: None,
        quotients: None,
    })
}
