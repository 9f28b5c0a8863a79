//! Command-line front end: option parsing, prompts and report assembly.

use std::io::{BufRead, Write};

use clap::Parser;

use crate::arith::fmt_q;
use crate::chow::{divisor_basis, quadruple_intersections, LinearRelations, Reduction};
use crate::error::{Error, Result};
use crate::hodge::batyrev;
use crate::hypersurface::{degrees, degrees_line, resolve_hypersurface, Hypersurface, HypersurfaceClass};
use crate::input::{matrix_shape, parse_cws, parse_point_matrix, Input, TokenStream};
use crate::ipsimplex::{incidence, ip_simplices};
use crate::kreuzer::kreuzer_line;
use crate::mori::{mori_generators, walls};
use crate::polytope::{cws_to_dual_pair, facets_and_reflexivity, LatticePolytope};
use crate::triangulate::{stanley_reisner, star_triangulations, StarTriangulation, DEFAULT_CAP};

pub const HELP: &str = "\
moricone: crepant star triangulations of a reflexive polytope P* in the N-lattice,
          Mori cones of the resulting toric varieties and intersection rings of
          hypersurfaces in them

Usage:    moricone [-<options>] [in-file [out-file]]

Options (single letters, may be concatenated):
    -h      show this help
    -f      filter mode: no prompts, process every record of the input
    -g      triangulations and Stanley-Reisner ideals (default)
    -I      facet incidence words (facet-interior points ignored)
    -m      Mori cone generators of the ambient space
    -P      lattice points of P* and IP-simplices
    -K      Kreuzer polynomial of P*
    -b      Hodge numbers and Euler number (CY), or arithmetic genera and
            Euler number together with -H
    -i      divisor classes and intersection polynomial on the hypersurface
    -c      Chern classes of the hypersurface
    -t      nonzero triple intersections D_i*D_j*D_k*H of toric divisors
    -d      topology of toric divisors on the hypersurface, del Pezzo candidates
    -a      shortcut for -gmPbictd
    -D      read a point matrix of P* instead of a weight system
    -H      read coefficients c1 c2 ... of the hypersurface class
            H = c1*D1 + c2*D2 + ... (default: anticanonical, CY)

Input:    a combined weight system `d1 w11 w12 ... d2 w21 w22 ...' per line,
          or with -D a header `dim np' or `np dim' followed by np*dim coordinates

Exit codes: 0 success, 1 usage or input error, 2 polytope not reflexive,
            3 triangulation search exceeds the facet point cap
";

#[derive(Parser, Debug, Clone, Default, PartialEq, Eq)]
#[command(name = "moricone", disable_help_flag = true, disable_version_flag = true)]
struct Args {
    #[arg(short = 'h', long = "help")]
    help: bool,
    #[arg(short = 'f')]
    filter: bool,
    #[arg(short = 'g')]
    g: bool,
    #[arg(short = 'I')]
    incidence: bool,
    #[arg(short = 'm')]
    mori: bool,
    #[arg(short = 'P')]
    ip: bool,
    #[arg(short = 'K')]
    kreuzer: bool,
    #[arg(short = 'b')]
    b: bool,
    #[arg(short = 'i')]
    intersections: bool,
    #[arg(short = 'c')]
    chern: bool,
    #[arg(short = 't')]
    triples: bool,
    #[arg(short = 'd')]
    divisors: bool,
    #[arg(short = 'a')]
    all: bool,
    #[arg(short = 'D')]
    points: bool,
    #[arg(short = 'H')]
    hypersurface: bool,
    in_file: Option<String>,
    out_file: Option<String>,
}

/// Which report sections to produce, after expanding `-a` and defaults.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct Sections {
    pub g: bool,
    pub incidence: bool,
    pub mori: bool,
    pub ip: bool,
    pub kreuzer: bool,
    pub b: bool,
    pub intersections: bool,
    pub chern: bool,
    pub triples: bool,
    pub divisors: bool,
}

impl Sections {
    fn needs_triangulations(&self) -> bool {
        self.g || self.mori || self.needs_hypersurface()
    }

    fn needs_hypersurface(&self) -> bool {
        self.b || self.intersections || self.chern || self.triples || self.divisors
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct RunConfig {
    pub help: bool,
    pub filter: bool,
    pub matrix_input: bool,
    pub hypersurface: bool,
    pub sections: Sections,
    pub in_file: Option<String>,
    pub out_file: Option<String>,
    pub cap: usize,
}

impl RunConfig {
    /// Parses `argv` (without the program name).
    pub fn from_args<I, S>(args: I) -> std::result::Result<RunConfig, String>
    where
        I: IntoIterator<Item = S>,
        S: Into<std::ffi::OsString> + Clone,
    {
        let argv = std::iter::once(std::ffi::OsString::from("moricone")).chain(args.into_iter().map(Into::into));
        let a = Args::try_parse_from(argv).map_err(|e| e.to_string())?;
        let mut s = Sections {
            g: a.g || a.all,
            incidence: a.incidence,
            mori: a.mori || a.all,
            ip: a.ip || a.all,
            kreuzer: a.kreuzer,
            b: a.b || a.all,
            intersections: a.intersections || a.all,
            chern: a.chern || a.all,
            triples: a.triples || a.all,
            divisors: a.divisors || a.all,
        };
        if s == Sections::default() {
            if a.hypersurface {
                s.b = true;
            } else {
                s.g = true;
            }
        }
        Ok(RunConfig {
            help: a.help,
            filter: a.filter,
            matrix_input: a.points,
            hypersurface: a.hypersurface,
            sections: s,
            in_file: a.in_file,
            out_file: a.out_file,
            cap: DEFAULT_CAP,
        })
    }
}

/// A parsed record: the dual pair with `ps` carrying the fan.
pub struct Record {
    pub p: LatticePolytope,
    pub ps: LatticePolytope,
}

impl Record {
    pub fn from_input(input: &Input) -> Result<Record> {
        match input {
            Input::Weights(cws) => {
                let (p, ps) = cws_to_dual_pair(cws)?;
                Ok(Record { p, ps })
            }
            Input::Points(m) => {
                let ps = facets_and_reflexivity(m)?;
                let p = ps.dual()?;
                Ok(Record { p, ps })
            }
        }
    }

    pub fn num_divisors(&self) -> usize {
        self.ps.divisor_points().len()
    }

    /// The complete text report for this record.
    pub fn report(&self, sections: &Sections, class: &HypersurfaceClass, show_class: bool, cap: usize) -> Result<String> {
        let mut out = String::new();
        let ps = &self.ps;
        if sections.needs_hypersurface() && ps.dim() != 4 {
            return Err(Error::Unsupported(format!(
                "hypersurface data needs a four-dimensional polytope, got dimension {}",
                ps.dim()
            )));
        }
        if sections.ip {
            out += &ip_section(ps)?;
        }
        if sections.incidence {
            out += &format!("Incidence: {}\n", incidence(ps).join(" "));
        }
        if sections.kreuzer {
            let pic = if ps.dim() == 4 { Some(batyrev(&self.p, ps)?.0) } else { None };
            out += &kreuzer_line(ps, pic);
            out.push('\n');
        }
        if show_class {
            out += &degrees_line(&degrees(&ip_simplices(ps)?, class)?);
            out.push('\n');
            out += &class.class_line();
            out.push('\n');
        }
        if !sections.needs_triangulations() {
            return Ok(out);
        }
        let hodge = if sections.b && class.is_cy() { Some(batyrev(&self.p, ps)?) } else { None };
        for t in star_triangulations(ps, cap)? {
            out += &self.triangulation_report(&t, sections, class, hodge)?;
        }
        Ok(out)
    }

    fn triangulation_report(
        &self,
        t: &StarTriangulation,
        s: &Sections,
        class: &HypersurfaceClass,
        hodge: Option<(i64, i64)>,
    ) -> Result<String> {
        let mut out = String::new();
        if s.g {
            let words = t.words();
            let sr = stanley_reisner(t).words();
            out += &format!("{} Triangulation\n{}\n", words.len(), words.join(" "));
            out += &format!("{} SR-ideal\n{}\n", sr.len(), sr.join(" "));
        }
        if s.mori {
            let gens = mori_generators(&walls(t)?);
            out += &format!("{} Mori generators\n", gens.len());
            for g in gens {
                let row: String = g.iter().map(|x| format!("{x:>4}")).collect();
                out += &row;
                out.push('\n');
            }
        }
        if !s.needs_hypersurface() {
            return Ok(out);
        }
        let rel = LinearRelations::new(t.vectors());
        let basis = divisor_basis(&rel)?;
        let tensor = quadruple_intersections(t, Reduction::FirstSimplex)?;
        let hs = Hypersurface::new(&basis, &tensor, class)?;
        let rank = basis.rank();
        if s.b {
            let (chi0, chi1, e) = hs.genera();
            match hodge {
                Some((h11, h21)) => {
                    out += "Hodge numbers and Euler number of H:\n";
                    out += &format!("h11: {h11} , h21: {h21}  [ {} ]\n", fmt_q(&e));
                }
                None => {
                    out += "Arithmetic genera and Euler number of H:\n";
                    out += &format!("chi_0: {} , chi_1: {}  [ {} ]\n", fmt_q(&chi0), fmt_q(&chi1), fmt_q(&e));
                    if ![&chi0, &chi1, &e].iter().all(|x| x.is_integer()) {
                        out += "(fractional values: H meets point-like singularities of the ambient space)\n";
                    }
                }
            }
        }
        if s.intersections {
            let kind = if basis.integral { "integral basis" } else { "rational basis" };
            out += &format!("divisor classes ({kind} {}):\n", basis_names(rank));
            out += &basis.expansion_strings().join(", ");
            out.push('\n');
            out += "intersection polynomial:\n";
            out += &hs.intersection_polynomial().render("J");
            out.push('\n');
        }
        if s.chern {
            let c = hs.chern();
            out += &format!("Chern classes of H (basis {}):\n", basis_names(rank));
            out += &format!("c1={}\nc2={}\nc3={}\n", c.c1.render("J"), c.c2.render("J"), c.c3.render("J"));
        }
        if s.triples {
            let triples: Vec<String> = hs
                .divisor_triples()
                .iter()
                .map(|(idx, v)| format!("d{}*d{}*d{}={}", idx[0] + 1, idx[1] + 1, idx[2] + 1, fmt_q(v)))
                .collect();
            out += "triple intersection numbers of the toric divisors on H:\n";
            out += &triples.join(", ");
            out.push('\n');
        }
        if s.divisors {
            let topo = hs.divisor_topology();
            out += "Euler characteristics and arithmetic genera of the toric divisors on H:\n";
            for d in &topo {
                out += &format!("d{}: chi={} chi_0={} c1^2={}\n", d.divisor + 1, fmt_q(&d.euler), fmt_q(&d.chi0), fmt_q(&d.c1_squared));
            }
            let dps: Vec<String> = topo
                .iter()
                .filter_map(|d| d.del_pezzo.map(|n| format!("d{}({n})", d.divisor + 1)))
                .collect();
            out += &format!("dPs: {} ; {}\n", dps.len(), dps.join(" "));
            let iso: Vec<String> = hs
                .isolated_del_pezzos(&topo)
                .iter()
                .map(|&i| format!("d{}({})", i + 1, topo[i].del_pezzo.expect("candidate")))
                .collect();
            out += &format!("non-intersecting dPs: {} ; {}\n", iso.len(), iso.join(" "));
        }
        Ok(out)
    }
}

fn ip_section(ps: &LatticePolytope) -> Result<String> {
    let ips = ip_simplices(ps)?;
    let mut out = format!("{} {}  points of P* and IP-simplices\n", ps.dim(), ps.num_points());
    for k in 0..ps.dim() {
        let row: String = ps.points().iter().map(|x| format!("{:>5}", x[k])).collect();
        out += &row;
        out.push('\n');
    }
    out += &format!("------------------------------   #IP-simp={}\n", ips.len());
    for s in ips {
        let row: String = s.coefficients.iter().map(|x| format!("{x:>5}")).collect();
        out += &format!("{row}{:>4}=d  codim={}\n", s.degree, s.codim);
    }
    Ok(out)
}

fn read_record<R: BufRead, W: Write>(
    stream: &mut TokenStream<R>,
    matrix: bool,
    prompt: Option<&mut W>,
) -> Result<Option<Input>> {
    if !matrix {
        if let Some(w) = prompt {
            writeln!(w, "Degrees and weights  `d1 w11 w12 ... d2 w21 w22 ...':")?;
            w.flush()?;
        }
        return match stream.next_line()? {
            None => Ok(None),
            Some(line) => Ok(Some(Input::Weights(parse_cws(&line)?))),
        };
    }
    let mut prompt = prompt;
    if let Some(w) = prompt.as_deref_mut() {
        writeln!(w, "`#lines #colums' (= `PolyDim #Points' or `#Points PolyDim'):")?;
        w.flush()?;
    }
    if stream.at_end()? {
        return Ok(None);
    }
    let h = stream.integers(2)?;
    let (dim, np, dim_first) = matrix_shape(h[0], h[1])?;
    if let Some(w) = prompt {
        if dim_first {
            writeln!(w, "Type the {} coordinates as dim={dim} lines with #pts={np} columns:", dim * np)?;
        } else {
            writeln!(w, "Type the {} coordinates as #pts={np} lines with dim={dim} columns:", dim * np)?;
        }
        w.flush()?;
    }
    let vals = stream.integers(dim * np)?;
    Ok(Some(Input::Points(parse_point_matrix(h[0], h[1], &vals)?)))
}

fn basis_names(rank: usize) -> String {
    match rank {
        1 => "J1".into(),
        2 => "J1, J2".into(),
        _ => format!("J1 ... J{rank}"),
    }
}

/// Processes the input and writes reports; returns the exit code.
/// Diagnostics go to `err`; each record's report is written only when complete.
pub fn run<R: BufRead, W: Write, P: Write, E: Write>(
    config: &RunConfig,
    input: R,
    out: &mut W,
    prompt: &mut P,
    err: &mut E,
) -> i32 {
    match run_inner(config, input, out, prompt) {
        Ok(()) => 0,
        Err(e) => {
            let _ = writeln!(err, "moricone: {e}");
            e.exit_code()
        }
    }
}

fn run_inner<R: BufRead, W: Write, P: Write>(config: &RunConfig, input: R, out: &mut W, prompt: &mut P) -> Result<()> {
    let mut stream = TokenStream::new(input);
    loop {
        let p = if config.filter { None } else { Some(&mut *prompt) };
        let Some(input) = read_record(&mut stream, config.matrix_input, p)? else {
            if config.filter {
                return Ok(());
            }
            return Err(Error::Parse("no input".into()));
        };
        let record = Record::from_input(&input)?;
        let n = record.num_divisors();
        let class = if config.hypersurface {
            if !config.filter {
                writeln!(prompt, "Type the {n} (integer) entries for the hypersurface class:")?;
                prompt.flush()?;
            }
            let c = stream.integers(n)?;
            resolve_hypersurface(Some(&c), n)?
        } else {
            resolve_hypersurface(None, n)?
        };
        let text = record.report(&config.sections, &class, config.hypersurface, config.cap)?;
        out.write_all(text.as_bytes())?;
        out.flush()?;
        if !config.filter {
            return Ok(());
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cfg(args: &[&str]) -> RunConfig {
        RunConfig::from_args(args.iter().copied()).unwrap()
    }

    #[test]
    fn default_and_shortcuts() {
        assert_eq!(cfg(&[]).sections, Sections { g: true, ..Default::default() });
        assert_eq!(cfg(&["-H"]).sections, Sections { b: true, ..Default::default() });
        let a = cfg(&["-a"]).sections;
        assert!(a.g && a.mori && a.ip && a.b && a.intersections && a.chern && a.triples && a.divisors);
        assert!(!a.incidence && !a.kreuzer);
        assert_eq!(cfg(&["-fg"]), cfg(&["-gf"]));
        assert_eq!(cfg(&["-fgD", "in.txt"]).in_file.as_deref(), Some("in.txt"));
    }

    #[test]
    fn malformed_flags_are_rejected() {
        assert!(RunConfig::from_args(["-x"]).is_err());
        assert!(RunConfig::from_args(["-fz"]).is_err());
    }

    #[test]
    fn projective_plane_filter() {
        let mut out = Vec::new();
        let mut prompt = Vec::new();
        let mut err = Vec::new();
        let code = run(&cfg(&["-fg"]), "3 1 1 1\n".as_bytes(), &mut out, &mut prompt, &mut err);
        assert_eq!(code, 0, "{}", String::from_utf8_lossy(&err));
        assert_eq!(String::from_utf8(out).unwrap(), "3 Triangulation\n101 110 011\n1 SR-ideal\n111\n");
        assert!(prompt.is_empty());
    }
}
