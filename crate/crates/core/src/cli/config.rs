//! `key = value` config files, merged into the argument list so that the
//! command line overrides them.

use clap::CommandFactory;
use std::path::Path;

use super::args::Cli;

#[derive(Debug, thiserror::Error)]
pub enum ConfigError {
    #[error("cannot read config file {path}: {source}")]
    Read { path: String, source: std::io::Error },
    #[error("config line {line}: expected `key = value`")]
    Syntax { line: usize },
    #[error("config line {line}: unknown key `{key}` for this command")]
    UnknownKey { line: usize, key: String },
    #[error("config line {line}: `{key}` takes true or false")]
    NotBool { line: usize, key: String },
}

pub fn parse_config(text: &str) -> Result<Vec<(usize, String, String)>, ConfigError> {
    let mut out = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let (k, v) = line.split_once('=').ok_or(ConfigError::Syntax { line: i + 1 })?;
        let key = k.trim().replace('_', "-");
        if key.is_empty() {
            return Err(ConfigError::Syntax { line: i + 1 });
        }
        out.push((i + 1, key, v.trim().to_string()));
    }
    Ok(out)
}

fn config_path(args: &[String]) -> Option<(String, usize)> {
    let mut i = 1;
    while i < args.len() {
        if args[i] == "--config" {
            return args.get(i + 1).map(|p| (p.clone(), i));
        }
        if let Some(p) = args[i].strip_prefix("--config=") {
            return Some((p.to_string(), i));
        }
        i += 1;
    }
    None
}

/// Inserts `--key value` pairs from the config file right after the
/// subcommand name.
pub fn merge_config(args: Vec<String>) -> Result<Vec<String>, ConfigError> {
    let Some((path, cfg_at)) = config_path(&args) else {
        return Ok(args);
    };
    let text = std::fs::read_to_string(Path::new(&path)).map_err(|source| ConfigError::Read { path, source })?;
    let entries = parse_config(&text)?;
    let cmd = Cli::command();
    let sub_at = args
        .iter()
        .enumerate()
        .skip(1)
        .find(|&(i, a)| i != cfg_at + 1 && !a.starts_with('-') && cmd.find_subcommand(a).is_some());
    let Some((idx, name)) = sub_at else {
        // Let the parser report the missing subcommand.
        return Ok(args);
    };
    let sub = cmd.find_subcommand(name).expect("found above");
    let mut extra = Vec::new();
    for (line, key, value) in entries {
        let arg = sub
            .get_arguments()
            .find(|a| a.get_long() == Some(key.as_str()) && key != "config")
            .ok_or_else(|| ConfigError::UnknownKey { line, key: key.clone() })?;
        if arg.get_action().takes_values() {
            extra.push(format!("--{key}"));
            extra.push(value);
        } else {
            match value.as_str() {
                "true" => extra.push(format!("--{key}")),
                "false" => {}
                _ => return Err(ConfigError::NotBool { line, key }),
            }
        }
    }
    let mut merged = args[..=idx].to_vec();
    merged.extend(extra);
    merged.extend_from_slice(&args[idx + 1..]);
    Ok(merged)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(v: &[&str]) -> Vec<String> {
        v.iter().map(|x| x.to_string()).collect()
    }

    #[test]
    fn parses_lines() {
        let e = parse_config("# c\n n = 7\n\ntheta=0.3\nno_refine = true\n").unwrap();
        assert_eq!(e.len(), 3);
        assert_eq!(e[2].1, "no-refine");
        assert!(matches!(parse_config("oops"), Err(ConfigError::Syntax { line: 1 })));
    }

    #[test]
    fn merges_before_command_line_flags() {
        let dir = tempfile::tempdir().unwrap();
        let p = dir.path().join("c.conf");
        std::fs::write(&p, "n = 3\ntheta = 0.1\nno-refine = true\n").unwrap();
        let args = s(&["qho-nodal", "--config", p.to_str().unwrap(), "verify", "two-domains", "--n", "5"]);
        let m = merge_config(args).unwrap();
        let pos = |x: &str| m.iter().position(|a| a == x).unwrap();
        assert!(pos("3") < pos("5"));
        assert!(m.contains(&"--no-refine".to_string()));
        std::fs::write(&p, "bogus = 1\n").unwrap();
        let args = s(&["qho-nodal", "verify", "bounds", "--config", p.to_str().unwrap()]);
        assert!(matches!(merge_config(args), Err(ConfigError::UnknownKey { .. })));
    }
}
