from setuptools import setup, find_packages


setup(
  name='stackypoly',
  version='0.1.0',
  license='MIT',
  author="Izz Hafeez",
  author_email='izzhafeez@gmail.com',
  packages=find_packages('src'),
  package_dir={'': 'src'},
  package_data={'stacky': ['data/assets/*.json']},
  keywords='toric symplectic polytope quasifold orbifold',
  long_description=open('README.md').read(),
  long_description_content_type='text/markdown',
  include_package_data=True,
  python_requires='>=3.9',
  install_requires=[
      'numpy',
      'pandas',
      'shapely',
      'sympy',
      'tqdm'
    ],
  extras_require={
      'test': ['pytest']
    },
  entry_points={
      'console_scripts': ['stacky = stacky.cli.main:main']
    },

)
