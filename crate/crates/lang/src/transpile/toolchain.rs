use std::collections::BTreeMap;
use std::path::Path;
use std::sync::OnceLock;

use serde::{Deserialize, Serialize};

use super::TargetLanguage;

const BUILTIN_TOOLCHAINS: &str = include_str!("../../toolchains.toml");

/// How to build and run one target. Command templates use `{src}`, `{bin}`
/// and `{dir}` placeholders.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ToolchainDescriptor {
    pub extension: String,
    /// Fixed file name when the target requires one (Java's public class).
    #[serde(default)]
    pub source_name: Option<String>,
    #[serde(default)]
    pub compile: Option<Vec<String>>,
    pub run: Vec<String>,
    pub version: Vec<String>,
    #[serde(default)]
    pub entry: String,
    #[serde(default)]
    pub env: BTreeMap<String, String>,
}

impl ToolchainDescriptor {
    pub fn source_file_name(&self) -> String {
        self.source_name.clone().unwrap_or_else(|| format!("main.{}", self.extension))
    }

    /// Substitutes the placeholders in a command template.
    pub fn expand(template: &[String], src: &Path, bin: &Path, dir: &Path) -> Vec<String> {
        template
            .iter()
            .map(|part| {
                part.replace("{src}", &src.to_string_lossy())
                    .replace("{bin}", &bin.to_string_lossy())
                    .replace("{dir}", &dir.to_string_lossy())
            })
            .collect()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Toolchains {
    targets: BTreeMap<TargetLanguage, ToolchainDescriptor>,
}

impl Toolchains {
    /// The descriptors shipped with the crate.
    pub fn builtin() -> &'static Toolchains {
        static CELL: OnceLock<Toolchains> = OnceLock::new();
        CELL.get_or_init(|| Toolchains::from_toml_str(BUILTIN_TOOLCHAINS).expect("bundled toolchains.toml is valid"))
    }

    pub fn from_toml_str(text: &str) -> Result<Toolchains, toml::de::Error> {
        toml::from_str(text)
    }

    /// Loads a descriptor file; targets it does not mention keep the bundled
    /// descriptor.
    pub fn load(path: &Path) -> Result<Toolchains, String> {
        let text = std::fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
        let overrides = Toolchains::from_toml_str(&text).map_err(|e| format!("{}: {e}", path.display()))?;
        let mut merged = Toolchains::builtin().clone();
        merged.targets.extend(overrides.targets);
        Ok(merged)
    }

    pub fn get(&self, target: TargetLanguage) -> Option<&ToolchainDescriptor> {
        self.targets.get(&target)
    }

    pub fn iter(&self) -> impl Iterator<Item = (TargetLanguage, &ToolchainDescriptor)> {
        self.targets.iter().map(|(t, d)| (*t, d))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_target_has_a_complete_descriptor() {
        let toolchains = Toolchains::builtin();
        for target in TargetLanguage::ALL {
            let d = toolchains.get(target).unwrap_or_else(|| panic!("{target} missing"));
            assert!(!d.extension.is_empty() && !d.run.is_empty() && !d.version.is_empty() && !d.entry.is_empty());
            let uses_src = d.run.iter().chain(d.compile.iter().flatten()).any(|p| p.contains("{src}"));
            assert!(uses_src, "{target} never mentions its source file");
        }
    }

    #[test]
    fn expand_fills_placeholders() {
        let cmd = ToolchainDescriptor::expand(
            &["cc".into(), "-o".into(), "{bin}".into(), "{src}".into()],
            Path::new("/t/main.c"),
            Path::new("/t/prog"),
            Path::new("/t"),
        );
        assert_eq!(cmd, ["cc", "-o", "/t/prog", "/t/main.c"]);
    }

    #[test]
    fn overrides_merge_over_builtin() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("tc.toml");
        std::fs::write(&path, "[python]\nextension = \"py\"\nrun = [\"pypy3\", \"{src}\"]\nversion = [\"pypy3\", \"-V\"]\n").unwrap();
        let t = Toolchains::load(&path).unwrap();
        assert_eq!(t.get(TargetLanguage::Python).unwrap().run[0], "pypy3");
        assert!(t.get(TargetLanguage::Cpp).is_some());
    }
}
