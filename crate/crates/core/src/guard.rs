/// Upper bound on the number of objects a single enumeration may produce.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Limits {
    pub max_objects: u64,
}

impl Default for Limits {
    fn default() -> Self {
        Self { max_objects: 1_000_000 }
    }
}

impl Limits {
    pub fn new(max_objects: u64) -> Self {
        Self { max_objects }
    }

    pub fn check(&self, what: &str, count: u64) -> crate::Result<()> {
        if count > self.max_objects {
            return Err(crate::Error::SizeGuard { what: what.to_string(), limit: self.max_objects });
        }
        Ok(())
    }
}
