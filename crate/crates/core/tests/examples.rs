//! Runs every example's entry point so the examples stay working.

macro_rules! example {
    ($name:ident) => {
        #[allow(dead_code)]
        mod $name {
            include!(concat!("../examples/", stringify!($name), ".rs"));
            pub fn check() {
                run().expect(stringify!($name));
            }
        }
        #[test]
        fn $name() {
            $name::check();
        }
    };
}

example!(field_arithmetic);
example!(tower_places);
example!(recovery_groups);
example!(golden_code);
example!(hermitian_code);
example!(bounds_table);
example!(descriptor_check);
