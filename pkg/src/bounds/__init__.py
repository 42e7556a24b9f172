# Closed-form bounds package
